//! The same computations over big and machine-word rationals.

use splitalg::freealg::{basis_up_to, Dend, Element, Tridend};
use splitalg::hopf::{antipode, coproduct, format_tensor, primitive_basis};
use splitalg::presentations::{builtin, check_coherence, check_compatibility, compatible_space, BUILTIN_NAMES};
use splitalg::series::{parse_series, PowerSeries, KNOWN_SERIES};
use splitalg::{Rational, Rational128, Rational64, Scalar};

fn render<S: Scalar>() -> Vec<String> {
    let mut out = Vec::new();
    for k in basis_up_to::<Tridend>(3, 1).unwrap() {
        let x = Element::<Tridend, S>::basis(k);
        out.push(format_tensor::<Tridend, S>(&coproduct::<Tridend, S>(&x), false));
        out.push(antipode::<Tridend, S>(&x).to_string());
    }
    for p in primitive_basis::<Dend, S>(4, 1).unwrap() {
        out.push(p.to_string());
    }
    for name in BUILTIN_NAMES {
        let p = builtin::<S>(name).unwrap();
        let coh = check_coherence(&p).unwrap();
        out.push(format!(
            "{} {} {} {}",
            name,
            check_compatibility(&p).passed(),
            coh.passed(),
            compatible_space(p.k(), p.alpha(), p.beta()).len()
        ));
        out.extend(coh.witnesses.iter().map(|w| w.description.clone()));
    }
    for k in KNOWN_SERIES {
        let f: PowerSeries<S> = parse_series(k.dual, 8).unwrap();
        out.push(f.comp_inverse().unwrap().to_string());
    }
    out
}

#[test]
fn results_do_not_depend_on_the_rational_type() {
    let big = render::<Rational>();
    assert_eq!(render::<Rational64>(), big);
    assert_eq!(render::<Rational128>(), big);
}
