//! Edit paths as first-class values: apply, weigh, reverse and align them.

use nedlib::{EditPath, Word};

fn main() -> nedlib::Result<()> {
    let from = Word::from("abcd");
    let path: EditPath = "x(a).n(b).c(c>a).n(d).v(e).v(e)".parse()?;
    let to = path.apply(&from)?;

    println!("{from} --[{path}]--> {to}");
    println!("bare {}  wgt {}  len {}  cost {}", path.bare(), path.wgt(), path.len(), path.cost());

    let (top, bottom) = path.render_alignment(&from)?.rows('_');
    println!("{top}\n{bottom}");

    let back = path.reverse_path()?;
    println!("reverse: {back} gives {}", back.apply(&to)?);
    Ok(())
}
