//! Composing two edit paths `s1 -> s2 -> s3` into one path `s1 -> s3`.
//!
//! The raw composition may contain blank letters `B` (an insert cancelled by a
//! delete). Its weight is at most the sum of the two weights and its length at
//! least the longer of the two, which bounds the cost of the projected path by
//! the sum of the two costs.

use nedlib::compose::{check_chain, cmps_h_traced, compose};
use nedlib::edit_model::{infer_subscripts, parse_bare};
use nedlib::Word;

fn main() -> nedlib::Result<()> {
    let (s1, s2, s3) = (Word::from("abab"), Word::from("bcbbab"), Word::from("ababab"));
    let p12 = infer_subscripts(&parse_bare("cvnvnn")?, &s1, &s2)?;
    let p23 = infer_subscripts(&parse_bare("vncnxnn")?, &s2, &s3)?;
    println!("p12 = {p12}  cost {}", p12.cost());
    println!("p23 = {p23}  cost {}", p23.cost());

    for step in cmps_h_traced(&p12, &p23)? {
        println!("  case {:>2} -> {}", step.case, step.emitted);
    }

    let out = compose(&p12, &p23)?;
    println!("raw       {}  wgt {} len {}", out.raw, out.wgt_raw, out.len_raw);
    println!("projected {}  wgt {} len {}", out.projected, out.wgt_proj, out.len_proj);
    println!(
        "cost {} <= {} ; checks {:?}",
        out.cost_proj(),
        p12.cost() + p23.cost(),
        check_chain(&out, &p12, &p23, &s1, &s3)
    );
    Ok(())
}
