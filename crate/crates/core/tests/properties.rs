use nedlib::compose::{check_chain, compose};
use nedlib::edit_model::infer_subscripts;
use nedlib::metrics::{ced, ed, ged, ned, ned_value, post_normalized, CedSearchConfig};
use nedlib::oracle::{brute_force_ced, brute_force_ed, brute_force_ned, EnumBudget};
use nedlib::{EditPath, Rational, Word};
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    proptest::string::string_regex(&format!("[abc]{{0,{max}}}"))
        .unwrap()
        .prop_map(|s| Word::from(s.as_str()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn ned_witness_is_optimal_and_valid(a in word(8), b in word(8)) {
        let r = ned(&a, &b);
        let p = r.path().unwrap();
        prop_assert_eq!(p.apply(&a).unwrap(), b.clone());
        prop_assert_eq!(p.cost(), r.value);
        prop_assert_eq!(ned_value(&a, &b), r.value);
        prop_assert!(r.value <= Rational::ONE);
    }

    #[test]
    fn ned_matches_oracle(a in word(5), b in word(5)) {
        prop_assert_eq!(ned_value(&a, &b), brute_force_ned(&a, &b).unwrap());
        prop_assert_eq!(ed(&a, &b).value, Rational::from(brute_force_ed(&a, &b).unwrap()));
    }

    #[test]
    fn ned_is_symmetric_and_triangular(a in word(7), b in word(7), c in word(7)) {
        let d = |x: &Word, y: &Word| ned_value(x, y);
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        prop_assert_eq!(d(&a, &b).is_zero(), a == b);
    }

    #[test]
    fn normalized_values_are_bounded(a in word(8), b in word(8)) {
        // ged and the post-normalized value are both bounded by 1
        prop_assert!(ged(&a, &b).value <= Rational::ONE);
        prop_assert!(post_normalized(&a, &b).value <= Rational::ONE);
        // an optimal ED path has cost at least the NED optimum
        let p = ed(&a, &b).path().unwrap().clone();
        prop_assert!(ned_value(&a, &b) <= p.cost());
    }

    #[test]
    fn witnesses_compose(a in word(7), b in word(7), c in word(7)) {
        let p12 = ned(&a, &b).path().unwrap().clone();
        let p23 = ned(&b, &c).path().unwrap().clone();
        let out = compose(&p12, &p23).unwrap();
        prop_assert!(check_chain(&out, &p12, &p23, &a, &c).all());
        prop_assert!(out.cost_proj() <= p12.cost() + p23.cost());
        prop_assert!(ned_value(&a, &c) <= out.cost_proj());
    }

    #[test]
    fn path_text_round_trips(a in word(8), b in word(8)) {
        let p = ned(&a, &b).path().unwrap().clone();
        let text = p.to_string();
        prop_assert_eq!(text.parse::<EditPath>().unwrap(), p.clone());
        prop_assert_eq!(infer_subscripts(&p.ops(), &a, &b).unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<EditPath>(&json).unwrap(), p.clone());
        let back = p.reverse_path().unwrap();
        prop_assert_eq!(back.apply(&b).unwrap(), a);
    }

    #[test]
    fn rational_text_round_trips(n in 0u64..10_000, d in 1u64..10_000) {
        let r = Rational::new(n, d);
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ced_restricted_matches_relaxed(a in word(3), b in word(3)) {
        let fast = ced(&a, &b, &CedSearchConfig::default()).unwrap();
        let slow = brute_force_ced(&a, &b, &EnumBudget::new("", 8)).unwrap();
        prop_assert_eq!(fast.value, slow);
        let chain = fast.chain().unwrap();
        prop_assert_eq!(chain.first(), Some(&a));
        prop_assert_eq!(chain.last(), Some(&b));
    }
}
