use proptest::prelude::*;
use splitalg::freealg::{basis, Dend, FreeAlgebra, Tridend, TwoAs};
use splitalg::series::{alternating_integer_check, expand_rational, parse_series, PowerSeries, KNOWN_SERIES};
use splitalg::Rational;

type Q = Rational;
type P = PowerSeries<Q>;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn signed(dims: &[i64], order: usize) -> P {
    let v: Vec<u64> = dims.iter().map(|&d| d as u64).collect();
    P::signed_dimensions(&v, order)
}

#[test]
fn known_inverses() {
    for k in KNOWN_SERIES {
        let f: P = parse_series(k.dual, 5).unwrap();
        let g = f.comp_inverse().unwrap();
        assert_eq!(g, signed(&k.dimensions.map(|d| d as i64), 5), "{}", k.name);
        assert!(alternating_integer_check(&g), "{}", k.name);
    }
}

#[test]
fn printed_predend_closed_form_is_not_the_expanded_series() {
    let printed: P = parse_series("-1-x+1/(1+x)^2", 5).unwrap();
    let expanded = P::from_i64(&[0, -1, 3, -4, 5, -6], 5);
    assert_ne!(printed, expanded);
    assert_eq!(parse_series::<Q>("-1+x+1/(1+x)^2", 5).unwrap(), expanded);
    assert!(!alternating_integer_check(&printed.comp_inverse().unwrap()));
}

#[test]
fn expansions() {
    let f: P = parse_series("-1-x+1/(1+x)^2", 4).unwrap();
    assert_eq!(f, P::from_i64(&[0, -3, 3, -4, 5], 4));
    let sq = expand_rational(&[q(0), q(-1), q(1)], &[q(1), q(3), q(3), q(1)], 8).unwrap();
    let want: Vec<i64> = (0..=8).map(|n: i64| if n % 2 == 0 { n * n } else { -n * n }).collect();
    assert_eq!(sq, P::from_i64(&want, 8));
}

fn dims_of<A: FreeAlgebra>(max: usize) -> Vec<i64> {
    (1..=max).map(|n| basis::<A>(n, 1).unwrap().len() as i64).collect()
}

#[test]
fn free_algebra_series_invert_to_dual_dimensions() {
    // diassociative n, triassociative 2ⁿ−1, and 1, 2, 2, 2, … for 2as
    let cases: [(Vec<i64>, &str); 3] = [
        (dims_of::<Dend>(6), "-x/(1+x)^2"),
        (dims_of::<Tridend>(6), "-2x/(1+2x) + x/(1+x)"),
        (dims_of::<TwoAs>(6), "-x + 2x^2/(1+x)"),
    ];
    for (dims, dual) in cases {
        let f = signed(&dims, 6);
        let g = f.comp_inverse().unwrap();
        assert_eq!(g, parse_series::<Q>(dual, 6).unwrap(), "{}", dual);
        assert_eq!(f.compose(&g).unwrap(), P::x(6));
        assert_eq!(g.compose(&f).unwrap(), P::x(6));
    }
}

fn unit_linear(max: usize) -> impl Strategy<Value = P> {
    prop::collection::vec(-4i64..=4, max).prop_map(move |mut v| {
        v[0] = -1;
        let mut c = vec![0];
        c.extend(v);
        P::from_i64(&c, max)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inversion_is_involutive(f in unit_linear(8)) {
        let g = f.comp_inverse().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), P::x(8));
        prop_assert_eq!(g.comp_inverse().unwrap(), f);
    }

    #[test]
    fn expansion_times_denominator_is_numerator(
        numer in prop::collection::vec(-5i64..=5, 1..5),
        mut denom in prop::collection::vec(-5i64..=5, 1..4),
    ) {
        if denom[0] == 0 {
            denom[0] = 1;
        }
        let n: Vec<Q> = numer.iter().map(|&c| q(c)).collect();
        let d: Vec<Q> = denom.iter().map(|&c| q(c)).collect();
        let e = expand_rational(&n, &d, 10).unwrap();
        prop_assert_eq!(&e * &P::new(d, 10), P::new(n, 10));
    }
}
