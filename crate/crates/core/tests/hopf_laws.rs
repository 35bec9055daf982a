use splitalg::freealg::{
    basis, basis_up_to, product, As, Dend, Element, FreeAlgebra, Mag, Op, Tridend, TwoAs, Zinbiel,
};
use splitalg::hopf::{
    antipode, coassociativity_check, coproduct, filtration_degree, is_primitive, iterated_reduced_coproduct,
    map_tensor, multiply, primitive_basis, pure, reduced_coproduct, swap, tensor_product_mixed, Antipode, Bialgebra,
    Coproducts, Tensor,
};
use splitalg::Rational;

type Q = Rational;

fn gens<A: FreeAlgebra>() -> usize {
    A::MAX_GENERATORS.unwrap_or(2).min(2)
}

fn keys<A: FreeAlgebra>(max: usize) -> Vec<A::Key> {
    basis_up_to::<A>(max, gens::<A>()).unwrap()
}

fn pos_keys<A: FreeAlgebra>(max: usize) -> Vec<A::Key> {
    keys::<A>(max).into_iter().filter(|k| !A::is_unit(k)).collect()
}

fn el<A: FreeAlgebra>(k: &A::Key) -> Element<A, Q> {
    Element::<A, Q>::basis(k.clone())
}

fn coassociative<A: Bialgebra>() {
    assert!(coassociativity_check::<A, Q>(4, gens::<A>()).unwrap(), "{}", A::FAMILY);
}

fn counit_laws<A: Bialgebra>() {
    let mut cx = Coproducts::<A, Q>::new();
    for k in keys::<A>(5) {
        let d = cx.key(&k);
        let left: Element<A, Q> =
            d.iter().filter(|((a, _), _)| A::is_unit(a)).map(|((_, b), c)| (b.clone(), c.clone())).collect();
        let right: Element<A, Q> =
            d.iter().filter(|((_, b), _)| A::is_unit(b)).map(|((a, _), c)| (a.clone(), c.clone())).collect();
        assert_eq!(left, el::<A>(&k), "{} {}", A::FAMILY, k);
        assert_eq!(right, el::<A>(&k), "{} {}", A::FAMILY, k);
    }
}

/// `Δ(x∘y) = Δx ∘ Δy` for every listed operation, total degree ≤ 4.
fn morphism<A: Bialgebra>(ops: &[Op]) {
    let mut cx = Coproducts::<A, Q>::new();
    let ks = pos_keys::<A>(3);
    for &op in ops {
        for a in &ks {
            for b in &ks {
                if A::degree(a) + A::degree(b) > 4 {
                    continue;
                }
                let p = product::<A, Q>(op, &el::<A>(a), &el::<A>(b)).unwrap();
                let lhs = cx.element(&p);
                let rhs = tensor_product_mixed::<A, Q>(op, &cx.key(a), &cx.key(b)).unwrap();
                assert_eq!(lhs, rhs, "{} {} {} {}", A::FAMILY, op, a, b);
            }
        }
    }
}

fn left_antipode<A: Bialgebra>() {
    let mut s = Antipode::<A, Q>::new();
    let mut cx = Coproducts::<A, Q>::new();
    for k in keys::<A>(4) {
        let d = cx.key(&k);
        let t = map_tensor::<A, Q, _, _>(&d, |a| s.key(a), |b| el::<A>(b));
        let m = multiply::<A, Q>(A::STAR, &t).unwrap();
        let want = if A::is_unit(&k) { el::<A>(&k) } else { Element::<A, Q>::zero() };
        assert_eq!(m, want, "{} {}", A::FAMILY, k);
    }
}

fn right_antipode<A: Bialgebra>() -> bool {
    let mut s = Antipode::<A, Q>::new();
    let mut cx = Coproducts::<A, Q>::new();
    keys::<A>(4).iter().all(|k| {
        let t = map_tensor::<A, Q, _, _>(&cx.key(k), |a| el::<A>(a), |b| s.key(b));
        let m = multiply::<A, Q>(A::STAR, &t).unwrap();
        let want = if A::is_unit(k) { el::<A>(k) } else { Element::<A, Q>::zero() };
        m == want
    })
}

fn connected<A: Bialgebra>() {
    for k in pos_keys::<A>(4) {
        let n = A::degree(&k);
        assert!(filtration_degree::<A, Q>(&el::<A>(&k)) <= n);
        assert!(iterated_reduced_coproduct::<A, Q>(&el::<A>(&k), n).unwrap().is_zero());
    }
}

fn all_laws<A: Bialgebra>(morphism_ops: &[Op]) {
    coassociative::<A>();
    counit_laws::<A>();
    morphism::<A>(morphism_ops);
    left_antipode::<A>();
    connected::<A>();
}

#[test]
fn dend_laws() {
    all_laws::<Dend>(Dend::OPS);
    assert!(right_antipode::<Dend>());
}

#[test]
fn tridend_laws() {
    all_laws::<Tridend>(Tridend::OPS);
    assert!(right_antipode::<Tridend>());
}

#[test]
fn twoas_laws() {
    // `·` satisfies the unital infinitesimal relation instead
    all_laws::<TwoAs>(&[Op::Star]);
    assert!(right_antipode::<TwoAs>());
}

#[test]
fn zinbiel_laws() {
    all_laws::<Zinbiel>(Zinbiel::OPS);
    assert!(right_antipode::<Zinbiel>());
}

#[test]
fn as_laws() {
    all_laws::<As>(As::OPS);
    assert!(right_antipode::<As>());
}

#[test]
fn mag_laws() {
    all_laws::<Mag>(Mag::OPS);
}

#[test]
fn mag_right_antipode_fails_without_associativity() {
    // m(id⊗S)Δ((x·x)·x) = −6(x·x)·x + 6x·(x·x) by hand
    let t: splitalg::trees::MagmaTree = "((x,x),x)".parse().unwrap();
    let d = coproduct::<Mag, Q>(&el::<Mag>(&t));
    let mut s = Antipode::<Mag, Q>::new();
    let m = multiply::<Mag, Q>(Op::Dot, &map_tensor::<Mag, Q, _, _>(&d, el::<Mag>, |b| s.key(b))).unwrap();
    let u: splitalg::trees::MagmaTree = "(x,(x,x))".parse().unwrap();
    let want = &el::<Mag>(&t).scale(&Q::from_integer((-6).into())) + &el::<Mag>(&u).scale(&Q::from_integer(6.into()));
    assert_eq!(m, want);
    assert!(!right_antipode::<Mag>());
}

#[test]
fn dend_is_not_cocommutative() {
    let found = basis::<Dend>(3, 1).unwrap().iter().any(|k| {
        let d = coproduct::<Dend, Q>(&el::<Dend>(k));
        swap::<Dend, Q>(&d) != d
    });
    assert!(found);
}

#[test]
fn tridend_products_of_primitives_are_primitive() {
    let mut prims = Vec::new();
    for n in 1..=2 {
        prims.extend(primitive_basis::<Tridend, Q>(n, 1).unwrap());
    }
    assert_eq!(prims.len(), 1 + 2);
    for w in &prims {
        for th in &prims {
            let p = product::<Tridend, Q>(Op::Dot, w, th).unwrap();
            assert!(is_primitive::<Tridend, Q>(&p), "{} . {}", w, th);
        }
    }
}

#[test]
fn twoas_unital_infinitesimal_relation() {
    let mut cx = Coproducts::<TwoAs, Q>::new();
    let one = splitalg::trees::AltTree::Unit;
    let ks = pos_keys::<TwoAs>(3);
    for x in &ks {
        for y in &ks {
            if x.degree() + y.degree() > 4 {
                continue;
            }
            let xy = product::<TwoAs, Q>(Op::Dot, &el::<TwoAs>(x), &el::<TwoAs>(y)).unwrap();
            let mut lhs: Tensor<TwoAs, Q> = cx.element(&xy);
            let a = tensor_product_mixed::<TwoAs, Q>(Op::Dot, &pure::<TwoAs, Q>(x, &one), &cx.key(y)).unwrap();
            let b = tensor_product_mixed::<TwoAs, Q>(Op::Dot, &cx.key(x), &pure::<TwoAs, Q>(&one, y)).unwrap();
            lhs = &(&lhs - &a) - &b;
            lhs.add_term((x.clone(), y.clone()), Q::from_integer(1.into()));
            assert!(lhs.is_zero(), "{} {}", x, y);
        }
    }
}

#[test]
fn as_has_no_primitives_above_degree_one_on_one_generator() {
    assert_eq!(primitive_basis::<As, Q>(1, 1).unwrap().len(), 1);
    for n in 2..=6 {
        assert!(primitive_basis::<As, Q>(n, 1).unwrap().is_empty());
    }
    // on two generators the degree-two primitives are the commutators
    let p = primitive_basis::<As, Q>(2, 2).unwrap();
    assert_eq!(p.len(), 1);
}

#[test]
fn dend_primitive_dimensions() {
    // the algebra is cofree, so 1 − 1/C(t) = t·C(t) counts primitives
    let dims: Vec<usize> = (1..=5).map(|n| primitive_basis::<Dend, Q>(n, 1).unwrap().len()).collect();
    assert_eq!(dims, [1, 1, 2, 5, 14]);
}

#[test]
fn as_primitives_follow_witt() {
    // free Lie algebra on two generators
    let dims: Vec<usize> = (1..=5).map(|n| primitive_basis::<As, Q>(n, 2).unwrap().len()).collect();
    assert_eq!(dims, [2, 1, 2, 3, 6]);
}

#[test]
fn delta_agrees_with_morphism_extension_for_dend() {
    // t∨s = (t≻Y)≺s, so Δ(t∨s) = (Δt ≻ ΔY) ≺ Δs
    let y: splitalg::trees::Pbt = "(|,|)".parse().unwrap();
    let mut cx = Coproducts::<Dend, Q>::new();
    let dy = cx.key(&y);
    for t in basis_up_to::<Dend>(4, 1).unwrap() {
        let Some((l, r)) = t.decompose() else { continue };
        let left = tensor_product_mixed::<Dend, Q>(Op::Succ, &cx.key(l), &dy).unwrap();
        let ext = tensor_product_mixed::<Dend, Q>(Op::Prec, &left, &cx.key(r)).unwrap();
        assert_eq!(cx.key(&t), ext, "{}", t);
    }
}

#[test]
fn antipode_is_involutive_on_associative_cocommutative_as() {
    for k in pos_keys::<As>(4) {
        let s = antipode::<As, Q>(&el::<As>(&k));
        assert_eq!(antipode::<As, Q>(&s), el::<As>(&k));
    }
}

#[test]
fn reduced_coproduct_legs_have_positive_degree() {
    for k in pos_keys::<Tridend>(4) {
        for ((a, b), _) in &reduced_coproduct::<Tridend, Q>(&el::<Tridend>(&k)).unwrap() {
            assert!(a.degree() >= 1 && b.degree() >= 1);
        }
    }
}
