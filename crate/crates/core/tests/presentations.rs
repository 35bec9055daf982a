use proptest::prelude::*;
use splitalg::exactlin::{in_span, same_span};
use splitalg::presentations::{
    builtin, check_coherence, check_compatibility, compatible_space, emit, parse_presentation, star_associator,
    star_is_associative, Leg, Monomial, Pattern, Presentation, BUILTIN_NAMES,
};
use splitalg::Rational;

type Q = Rational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn dend_unit(rels: Vec<Vec<Q>>) -> Presentation<Q> {
    Presentation::new(vec!["<".into(), ">".into()], vec![q(1), q(0)], vec![q(0), q(1)], Some(vec![q(1), q(1)]), rels)
        .unwrap()
}

#[test]
fn builtin_verdicts() {
    for name in BUILTIN_NAMES {
        let p = builtin::<Q>(name).unwrap();
        assert!(check_compatibility(&p).passed(), "{}", name);
        assert!(star_is_associative(&p).unwrap(), "{}", name);
        let coherent = check_coherence(&p).unwrap().passed();
        assert_eq!(coherent, name != "2as", "{}", name);
    }
}

#[test]
fn twoas_fails_coherence_on_dot_associativity() {
    let p = builtin::<Q>("2as").unwrap();
    let rep = check_coherence(&p).unwrap();
    assert!(rep.witnesses.iter().all(|w| w.relation == 1));
    let w = rep
        .witnesses
        .iter()
        .find(|w| w.pattern == Pattern::Legs([Leg::Unit, Leg::Unit, Leg::Generic]))
        .expect("witness with b = b' = 1");
    assert!(w.description.contains("(a.a')*a''"), "{}", w.description);
}

#[test]
fn dend_relations_span_the_compatible_space() {
    let d = builtin::<Q>("dend").unwrap();
    let space = compatible_space(2, d.alpha(), d.beta());
    assert_eq!(space.len(), 3);
    assert!(same_span(8, &space, d.relations()));
    // the star associator is their sum
    assert!(in_span(8, d.relations(), &star_associator(2, d.star().unwrap())));
}

#[test]
fn left_associativity_of_prec_is_rejected() {
    let mut r = vec![q(0); 8];
    r[Monomial::L(0, 0).index(2)] = q(1);
    r[Monomial::R(0, 0).index(2)] = q(-1);
    let p = dend_unit(vec![r]);
    assert!(!check_compatibility(&p).passed());
}

#[test]
fn golden_files_match() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../presentations");
    for name in BUILTIN_NAMES {
        let text = std::fs::read_to_string(format!("{}/{}.pres", dir, name)).unwrap();
        let p = builtin::<Q>(name).unwrap();
        assert_eq!(parse_presentation::<Q>(&text).unwrap(), p, "{}", name);
        let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{}\n", l)).collect();
        assert_eq!(body, emit(&p), "{}", name);
    }
}

/// `(x*y)*z` for `* = < + >`.
fn star_cube() -> Vec<Q> {
    [1, 1, 1, 1, 0, 0, 0, 0].into_iter().map(q).collect()
}

#[test]
fn killing_the_star_cube_makes_coherence_vacuous() {
    let mut r = vec![q(0); 8];
    r[Monomial::L(0, 0).index(2)] = q(1);
    let p = dend_unit(vec![star_cube(), r]);
    assert!(!check_compatibility(&p).passed());
    assert!(check_coherence(&p).unwrap().passed());
}

fn small_vec(len: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(-2i64..=2, len).prop_map(|v| v.into_iter().map(q).collect())
}

fn relations(n: usize) -> impl Strategy<Value = Vec<Vec<Q>>> {
    prop::collection::vec(small_vec(8), 1..=n)
        .prop_filter("nonzero relations", |rs| rs.iter().all(|r| r.iter().any(|c| *c != q(0))))
}

fn combine(a: &[Q], b: &[Q], c: &Q) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x.clone() + c.clone() * y.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn verdicts_depend_only_on_the_span(rels in relations(3), c in -3i64..=3, scale in 1i64..=3) {
        let p = dend_unit(rels.clone());
        // r₀ ↦ s·r₀ + c·r₁ is invertible on the list
        let mut other = rels.clone();
        if rels.len() > 1 {
            other[0] = combine(&rels[0].iter().map(|x| x * q(scale)).collect::<Vec<_>>(), &rels[1], &q(c));
        } else {
            other[0] = rels[0].iter().map(|x| x * q(scale)).collect();
        }
        prop_assume!(other[0].iter().any(|x| *x != q(0)));
        let p2 = dend_unit(other);
        prop_assert_eq!(check_compatibility(&p).passed(), check_compatibility(&p2).passed());
        prop_assert_eq!(check_coherence(&p).unwrap().passed(), check_coherence(&p2).unwrap().passed());
    }

    #[test]
    fn compatible_relations_are_coherent(coefs in prop::collection::vec(-2i64..=2, 5)) {
        let space = compatible_space(2, &[q(1), q(0)], &[q(0), q(1)]);
        let mut r = vec![q(0); 8];
        for (v, c) in space.iter().zip(&coefs) {
            r = combine(&r, v, &q(*c));
        }
        prop_assume!(r.iter().any(|x| *x != q(0)));
        let p = dend_unit(vec![r]);
        prop_assert!(check_compatibility(&p).passed());
        prop_assert!(check_coherence(&p).unwrap().passed());
    }

    #[test]
    fn coherence_implies_compatibility(rels in relations(2)) {
        let mut span = rels.clone();
        span.push(star_associator(2, &[q(1), q(1)]));
        prop_assume!(!in_span(8, &span, &star_cube()));
        let p = dend_unit(rels);
        if check_coherence(&p).unwrap().passed() {
            prop_assert!(check_compatibility(&p).passed());
        }
    }
}
