use cts_core::dag::{Instance, LabeledDag, ShuffleInstance};
use cts_core::lang::{Alphabet, Dfa};
use cts_core::reductions::quotient_reduce;
use cts_core::solvers::{
    dispatch, solve_brute, solve_district_monomial, solve_group_csh, DistrictMonomial, GroupConfig,
    GroupPresentation, LanguageSpec, SolveOptions,
};
use cts_core::Caps;
use proptest::prelude::*;

const REGEXES: &[&str] = &[
    "(ab)*",
    "(aa+b)*",
    "(a+b)*aa(a+b)*+(ab)*",
    "(ab)*(ε+b(a+b)*)",
    "(a+b)*ab(a+b)*",
    "b*(ab*ab*)*",
    "(aab+b)*",
];

fn alpha(s: &str) -> Alphabet {
    Alphabet::new(s.chars()).unwrap()
}

fn words(letters: &'static str, max_len: usize, max_count: usize) -> impl Strategy<Value = Vec<String>> {
    let chars: Vec<char> = letters.chars().collect();
    prop::collection::vec(
        prop::collection::vec(prop::sample::select(chars), 0..=max_len).prop_map(|w| w.into_iter().collect()),
        0..=max_count,
    )
}

/// Letters plus forward edges `i → j`, so the graph is acyclic.
fn dags(max_n: usize) -> impl Strategy<Value = LabeledDag> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(prop::sample::select(vec!['a', 'b']), n),
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(letters, bits)| {
            let n = letters.len();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            let letters: String = letters.into_iter().collect();
            LabeledDag::from_letters(&alpha("ab"), &letters, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    // in an abelian group the image of an interleaving is that of the
    // concatenation, whatever the split into rare and frequent strings
    #[test]
    fn abelian_answer_is_the_concatenation(
        rare in words("abc", 3, 4),
        na in prop_oneof![0usize..=3, 60usize..=80],
        nb in prop_oneof![0usize..=3, 60usize..=80],
        target in 0usize..4,
    ) {
        // single letters either clearly rare or clearly frequent; a few
        // dozen rare strings would make the exact search blow up
        let mut strings = rare;
        strings.extend(std::iter::repeat("a".to_string()).take(na));
        strings.extend(std::iter::repeat("b".to_string()).take(nb));
        let gp = GroupPresentation::cyclic(4, alpha("abc"), vec![1, 2, 3], &[target]).unwrap();
        let inst = ShuffleInstance::new(alpha("abc"), strings.clone()).unwrap();
        let r = solve_group_csh(&inst, &gp, &GroupConfig { insertions: Some(2), ..Default::default() }, &Caps::default()).unwrap();
        prop_assert_eq!(r.decision, gp.eval(&strings.concat()) == Some(target));
        if let Some(order) = &r.witness {
            prop_assert!(gp.accepts_word(&inst.dag().spell(order)));
        }
    }

    #[test]
    fn quotient_matches_left_quotient(g in dags(7), u in "[ab]{0,3}", k in 0..REGEXES.len()) {
        let caps = Caps::default();
        let lang = Dfa::parse_regex(REGEXES[k], &alpha("ab")).unwrap();
        let big = quotient_reduce(&g, &u).unwrap();
        let direct = solve_brute(&Instance::Dag(big), &lang, &caps).unwrap().decision;
        let quotient = lang.left_quotient(&u).unwrap();
        let reduced = solve_brute(&Instance::Dag(g), &quotient, &caps).unwrap().decision;
        prop_assert_eq!(direct, reduced);
    }

    #[test]
    fn dispatch_agrees_with_brute_on_dags(g in dags(9), k in 0..REGEXES.len()) {
        let lang = Dfa::parse_regex(REGEXES[k], &alpha("ab")).unwrap();
        let inst = Instance::Dag(g);
        let r = dispatch(&inst, &LanguageSpec::regex(REGEXES[k]), &SolveOptions::default()).unwrap();
        let b = solve_brute(&inst, &lang, &Caps::default()).unwrap();
        prop_assert_eq!(r.decision, b.decision, "solver {}", r.solver);
    }

    #[test]
    fn district_agrees_with_brute(strings in words("abc", 4, 4), odd_first in any::<bool>()) {
        let parity = |letter: usize, accept: usize| {
            let mut mu = vec![0; 2];
            mu[letter] = 1;
            GroupPresentation::cyclic(2, alpha("ab"), mu, &[accept]).unwrap()
        };
        let dm = DistrictMonomial::new(vec![parity(0, odd_first as usize), parity(1, 0)], vec!['c']).unwrap();
        let inst = ShuffleInstance::new(alpha("abc"), strings).unwrap();
        let caps = Caps::default();
        let r = solve_district_monomial(&inst, &dm, &GroupConfig::default(), &caps).unwrap();
        let lang = dm.to_dfa(&alpha("abc"));
        let b = solve_brute(&Instance::Strings(inst), &lang, &caps).unwrap();
        prop_assert_eq!(r.decision, b.decision);
    }
}

trait AcceptsWord {
    fn accepts_word(&self, w: &str) -> bool;
}

impl AcceptsWord for GroupPresentation {
    fn accepts_word(&self, w: &str) -> bool {
        self.eval(w).is_some_and(|x| self.is_accepting(x))
    }
}

fn complement_union() -> LanguageSpec {
    LanguageSpec::parse(
        r#"{"union": [
            {"monomial": {"gaps": ["", "ab"], "pivots": "b"}},
            {"monomial": {"gaps": ["ab", ""], "pivots": "a"}},
            {"monomial": {"gaps": ["ab", "", "ab"], "pivots": "aa"}},
            {"monomial": {"gaps": ["ab", "", "ab"], "pivots": "bb"}}
        ]}"#,
    )
    .unwrap()
}

#[test]
fn complement_union_fixture() {
    let spec = complement_union();
    let opts = SolveOptions::default();
    let single = |s: &str| Instance::Strings(ShuffleInstance::new(alpha("ab"), vec![s.to_string()]).unwrap());
    assert!(!dispatch(&single("ab"), &spec, &opts).unwrap().decision);
    assert!(dispatch(&single("ba"), &spec, &opts).unwrap().decision);

    // the union is the complement of (ab)*
    let ab_star = Dfa::parse_regex("(ab)*", &alpha("ab")).unwrap();
    for len in 0..=8 {
        for bits in 0u32..1 << len {
            let w: String = (0..len).map(|i| if bits >> i & 1 == 1 { 'b' } else { 'a' }).collect();
            let r = dispatch(&single(&w), &spec, &opts).unwrap();
            assert_eq!(r.decision, !ab_star.accepts(&w).unwrap(), "{w}");
            assert!(r.solver.starts_with("union/monomial") || !r.decision);
        }
    }
}
