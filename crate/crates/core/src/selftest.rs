//! The acceptance suite: nine exact checks tying the free algebras, their
//! Hopf structure, the presentation checker and the series tools to the
//! published tables and identities.

use std::fmt::Display;

use crate::exactlin::same_span;
use crate::freealg::{basis, basis_up_to, product, As, Dend, Element, FreeAlgebra, Mag, Op, Tridend, TwoAs, Zinbiel};
use crate::hopf::{
    coassociativity_check, coproduct, filtration_degree, is_primitive, iterated_reduced_coproduct, map_tensor,
    multiply, primitive_basis, tensor_product_mixed, Antipode, Bialgebra, Coproducts, Endomorphism,
};
use crate::presentations::{builtin, check_coherence, check_compatibility, compatible_space, Leg, Monomial, Pattern};
use crate::series::{alternating_integer_check, parse_series, PowerSeries, KNOWN_SERIES};
use crate::trees::{MagmaTree, Pbt};
use crate::Rational;

type Q = Rational;
type E<A> = Element<A, Q>;

pub const TITLES: [&str; 9] = [
    "dimension tables",
    "series inversion",
    "relation suites",
    "Hopf axioms",
    "compatible space of the dendriform unit action",
    "coherence verdicts",
    "primitive elements",
    "convolution",
    "coproduct recursion equals morphism extension",
];

/// Outcome of one criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub criterion: usize,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn title(&self) -> &'static str {
        TITLES[self.criterion - 1]
    }
}

impl Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {}: {} [{}] {}", self.criterion, verdict, self.title(), self.detail)
    }
}

/// Runs criterion `n` (1-based).
pub fn run(n: usize) -> Outcome {
    let r = match n {
        1 => dimension_tables(),
        2 => series_inversion(),
        3 => relation_suites(),
        4 => hopf_axioms(),
        5 => compatible_space_of_dend(),
        6 => coherence_verdicts(),
        7 => primitives(),
        8 => convolution(),
        9 => recursion_is_extension(),
        _ => Err(format!("no criterion {}", n)),
    };
    let (passed, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { criterion: n, passed, detail }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=TITLES.len()).map(run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn el<A: FreeAlgebra>(k: &A::Key) -> E<A> {
    E::<A>::basis(k.clone())
}

fn mul<A: FreeAlgebra>(op: Op, a: &E<A>, b: &E<A>) -> E<A> {
    product::<A, Q>(op, a, b).expect("positive-degree operands")
}

fn gens<A: FreeAlgebra>() -> usize {
    A::MAX_GENERATORS.unwrap_or(2).min(2)
}

fn dims<A: FreeAlgebra>(max: usize, generators: usize) -> Vec<usize> {
    (1..=max).map(|n| basis::<A>(n, generators).map_or(0, |b| b.len())).collect()
}

fn dimension_tables() -> Result<String, String> {
    let rows: [(&str, Vec<usize>, &[usize]); 4] = [
        ("dend", dims::<Dend>(6, 1), &[1, 2, 5, 14, 42, 132]),
        ("tridend", dims::<Tridend>(5, 1), &[1, 3, 11, 45, 197]),
        ("2as", dims::<TwoAs>(5, 1), &[1, 2, 6, 22, 90]),
        ("mag", dims::<Mag>(5, 1), &[1, 1, 2, 5, 14]),
    ];
    for (name, got, want) in &rows {
        ensure(got == want, || format!("{}: got {:?}, expected {:?}", name, got, want))?;
    }
    Ok("dend, tridend, 2as, mag match".into())
}

fn series_inversion() -> Result<String, String> {
    let mut checked = Vec::new();
    for k in KNOWN_SERIES.iter().filter(|k| k.name != "dend") {
        let f: PowerSeries<Q> = parse_series(k.dual, 5).map_err(|e| e.to_string())?;
        let g = f.comp_inverse().map_err(|e| e.to_string())?;
        let want: Vec<Q> = k.dimensions.iter().map(|&d| q(d as i64)).collect();
        ensure(g.dimensions() == want && alternating_integer_check(&g), || {
            format!("{}: inverse of {} is {}", k.name, k.dual, g)
        })?;
        checked.push(if k.conjectural { format!("{} (conjectural)", k.name) } else { k.name.to_string() });
    }
    // the printed closed form for predend carries a sign slip
    let printed: PowerSeries<Q> = parse_series("-1-x+1/(1+x)^2", 5).map_err(|e| e.to_string())?;
    let slip = !alternating_integer_check(&printed.comp_inverse().map_err(|e| e.to_string())?);
    ensure(slip, || "printed predend closed form unexpectedly inverts to integers".into())?;
    Ok(format!("{}; predend read as -x+3x^2-4x^3+... = -1+x+1/(1+x)^2", checked.join(", ")))
}

/// Evaluates a relation vector of a built-in presentation on `x, y, z`.
fn eval_relation<A: FreeAlgebra>(ops: &[Op], r: &[Q], x: &E<A>, y: &E<A>, z: &E<A>) -> E<A> {
    let k = ops.len();
    let mut out = E::<A>::zero();
    for (idx, c) in r.iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(*c)) {
        let v = match Monomial::from_index(idx, k) {
            Monomial::L(i, j) => mul::<A>(ops[j], &mul::<A>(ops[i], x, y), z),
            Monomial::R(i, j) => mul::<A>(ops[i], x, &mul::<A>(ops[j], y, z)),
        };
        out.add_scaled(c, &v);
    }
    out
}

type Relation<A> = Box<dyn Fn(&E<A>, &E<A>, &E<A>) -> E<A>>;

fn from_presentation<A: FreeAlgebra>(name: &str, ops: &'static [Op]) -> Vec<(String, Relation<A>)> {
    let p = builtin::<Q>(name).expect("built-in");
    p.relations()
        .iter()
        .map(|r| {
            let name = p.render_relation(r);
            let r = r.clone();
            let f: Relation<A> = Box::new(move |x, y, z| eval_relation::<A>(ops, &r, x, y, z));
            (name, f)
        })
        .collect()
}

fn associativity<A: FreeAlgebra>(op: Op) -> (String, Relation<A>) {
    let f: Relation<A> =
        Box::new(move |x, y, z| &mul::<A>(op, &mul::<A>(op, x, y), z) - &mul::<A>(op, x, &mul::<A>(op, y, z)));
    (format!("associativity of {}", op), f)
}

/// Every relation on every basis triple of total degree `≤ max_total`.
fn suite<A: FreeAlgebra>(max_total: usize, generators: usize, rels: &[(String, Relation<A>)]) -> Result<usize, String> {
    let keys: Vec<A::Key> = basis_up_to::<A>(max_total, generators)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|k| !A::is_unit(k))
        .collect();
    let mut count = 0;
    for a in &keys {
        for b in &keys {
            for c in &keys {
                if A::degree(a) + A::degree(b) + A::degree(c) > max_total {
                    continue;
                }
                let (x, y, z) = (el::<A>(a), el::<A>(b), el::<A>(c));
                for (name, rel) in rels {
                    let v = rel(&x, &y, &z);
                    ensure(v.is_zero(), || format!("{}: {} fails on ({}, {}, {}): {}", A::FAMILY, name, a, b, c, v))?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn relation_suites() -> Result<String, String> {
    let mut dend = from_presentation::<Dend>("dend", &[Op::Prec, Op::Succ]);
    dend.push(associativity::<Dend>(Op::Star));
    let mut tri = from_presentation::<Tridend>("tridend", &[Op::Prec, Op::Succ, Op::Dot]);
    tri.push(associativity::<Tridend>(Op::Star));
    let zinbiel: Relation<Zinbiel> = Box::new(|x, y, z| {
        let s = Op::Succ;
        let lhs = mul::<Zinbiel>(s, &(&mul::<Zinbiel>(s, x, y) + &mul::<Zinbiel>(s, y, x)), z);
        &lhs - &mul::<Zinbiel>(s, x, &mul::<Zinbiel>(s, y, z))
    });
    let zin = vec![("(x>y + y>x)>z = x>(y>z)".to_string(), zinbiel), associativity::<Zinbiel>(Op::Star)];
    let twoas = vec![associativity::<TwoAs>(Op::Star), associativity::<TwoAs>(Op::Dot)];
    let assoc = vec![associativity::<As>(Op::Star)];
    let n = suite::<Dend>(5, 1, &dend)?
        + suite::<Tridend>(4, 1, &tri)?
        + suite::<Zinbiel>(5, 2, &zin)?
        + suite::<TwoAs>(5, 1, &twoas)?
        + suite::<As>(5, 2, &assoc)?;
    Ok(format!("{} relation instances, zero failures", n))
}

fn hopf_laws<A: Bialgebra>() -> Result<(), String> {
    let g = gens::<A>();
    let fam = A::FAMILY;
    ensure(coassociativity_check::<A, Q>(4, g).map_err(|e| e.to_string())?, || format!("{}: not coassociative", fam))?;
    let keys = basis_up_to::<A>(4, g).map_err(|e| e.to_string())?;
    let mut cx = Coproducts::<A, Q>::new();
    let mut s = Antipode::<A, Q>::new();
    for k in &keys {
        let d = cx.key(k);
        let left: E<A> =
            d.iter().filter(|((a, _), _)| A::is_unit(a)).map(|((_, b), c)| (b.clone(), c.clone())).collect();
        let right: E<A> =
            d.iter().filter(|((_, b), _)| A::is_unit(b)).map(|((a, _), c)| (a.clone(), c.clone())).collect();
        ensure(left == el::<A>(k) && right == el::<A>(k), || format!("{}: counit law fails on {}", fam, k))?;

        let t = map_tensor::<A, Q, _, _>(&d, |a| s.key(a), |b| el::<A>(b));
        let m = multiply::<A, Q>(A::STAR, &t).map_err(|e| e.to_string())?;
        let want = if A::is_unit(k) { el::<A>(k) } else { E::<A>::zero() };
        ensure(m == want, || format!("{}: antipode law fails on {}", fam, k))?;

        if !A::is_unit(k) {
            let n = A::degree(k);
            let x = el::<A>(k);
            let top = iterated_reduced_coproduct::<A, Q>(&x, n).map_err(|e| e.to_string())?;
            ensure(filtration_degree::<A, Q>(&x) <= n && top.is_zero(), || format!("{}: {} not in F_{}", fam, k, n))?;
        }
    }
    let pos: Vec<&A::Key> = keys.iter().filter(|k| !A::is_unit(k)).collect();
    for a in &pos {
        for b in &pos {
            if A::degree(a) + A::degree(b) > 4 {
                continue;
            }
            let p = mul::<A>(A::STAR, &el::<A>(a), &el::<A>(b));
            let lhs = cx.element(&p);
            let rhs = tensor_product_mixed::<A, Q>(A::STAR, &cx.key(a), &cx.key(b)).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("{}: coproduct is not multiplicative on {} * {}", fam, a, b))?;
        }
    }
    Ok(())
}

fn hopf_axioms() -> Result<String, String> {
    hopf_laws::<Dend>()?;
    hopf_laws::<Tridend>()?;
    hopf_laws::<TwoAs>()?;
    hopf_laws::<Zinbiel>()?;
    hopf_laws::<Mag>()?;
    hopf_laws::<As>()?;
    Ok("dend, tridend, 2as, zinbiel, mag, as up to degree 4".into())
}

fn compatible_space_of_dend() -> Result<String, String> {
    let d = builtin::<Q>("dend").map_err(|e| e.to_string())?;
    let space = compatible_space(2, d.alpha(), d.beta());
    ensure(space.len() == 3, || format!("dimension {}", space.len()))?;
    ensure(same_span(8, &space, d.relations()), || "span differs from the dendriform relations".into())?;
    Ok("dimension 3, spanned by the three dendriform relations".into())
}

fn coherence_verdicts() -> Result<String, String> {
    for name in ["dend", "tridend", "predend", "noname", "admissible", "quadri"] {
        let p = builtin::<Q>(name).map_err(|e| e.to_string())?;
        ensure(check_compatibility(&p).passed(), || format!("{}: not compatible", name))?;
        let rep = check_coherence(&p).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("{}: not coherent: {}", name, rep.witnesses[0].description))?;
    }
    let p = builtin::<Q>("2as").map_err(|e| e.to_string())?;
    ensure(check_compatibility(&p).passed(), || "2as: not compatible".into())?;
    let rep = check_coherence(&p).map_err(|e| e.to_string())?;
    let w = rep
        .witnesses
        .iter()
        .find(|w| w.pattern == Pattern::Legs([Leg::Unit, Leg::Unit, Leg::Generic]))
        .ok_or_else(|| "2as: no coherence witness".to_string())?;
    Ok(format!("six coherent; 2as witness at {}: {}", w.pattern, w.description))
}

fn mag_gen(i: usize) -> E<Mag> {
    el::<Mag>(&MagmaTree::Gen(i))
}

fn dot(a: &E<Mag>, b: &E<Mag>) -> E<Mag> {
    mul::<Mag>(Op::Dot, a, b)
}

fn bracket(a: &E<Mag>, b: &E<Mag>) -> E<Mag> {
    &dot(a, b) - &dot(b, a)
}

fn assoc(a: &E<Mag>, b: &E<Mag>, c: &E<Mag>) -> E<Mag> {
    &dot(&dot(a, b), c) - &dot(a, &dot(b, c))
}

fn primitives() -> Result<String, String> {
    let d1 = primitive_basis::<Dend, Q>(1, 1).map_err(|e| e.to_string())?;
    let d2 = primitive_basis::<Dend, Q>(2, 1).map_err(|e| e.to_string())?;
    ensure(d1.len() == 1 && d2.len() == 1, || format!("Prim(Dend) dims {}, {}", d1.len(), d2.len()))?;
    let lv: Pbt = "(|,(|,|))".parse().expect("tree");
    let rv: Pbt = "((|,|),|)".parse().expect("tree");
    let gen = &el::<Dend>(&lv) - &el::<Dend>(&rv);
    ensure(same_span_el(&d2[0], &gen), || format!("degree-2 primitive is {}", d2[0]))?;

    let (x, y, z, t) = (mag_gen(0), mag_gen(1), mag_gen(2), mag_gen(3));
    ensure(is_primitive::<Mag, Q>(&bracket(&x, &y)), || "commutator not primitive".into())?;
    ensure(is_primitive::<Mag, Q>(&assoc(&x, &y, &z)), || "associator not primitive".into())?;
    let four = &(&assoc(&x, &y, &dot(&z, &t)) - &dot(&z, &assoc(&x, &y, &t))) - &dot(&assoc(&x, &y, &z), &t);
    ensure(!four.is_zero() && is_primitive::<Mag, Q>(&four), || "degree-4 element not primitive".into())?;
    let cyc = &(&(&assoc(&x, &y, &z) + &assoc(&y, &z, &x)) + &assoc(&z, &x, &y))
        - &(&(&assoc(&x, &z, &y) + &assoc(&y, &x, &z)) + &assoc(&z, &y, &x));
    let jac = &(&bracket(&bracket(&x, &y), &z) + &bracket(&bracket(&y, &z), &x)) + &bracket(&bracket(&z, &x), &y);
    ensure(cyc == jac, || "non-associative Jacobi identity fails".into())?;
    Ok("Prim(Dend) 1, 1; magmatic bracket, associator, degree-4 element, Jacobi".into())
}

/// Whether two nonzero elements are proportional.
fn same_span_el(a: &E<Dend>, b: &E<Dend>) -> bool {
    let keys: Vec<Pbt> =
        a.keys().chain(b.keys()).cloned().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let row = |e: &E<Dend>| keys.iter().map(|k| e.coeff(k)).collect::<Vec<_>>();
    same_span(keys.len(), &[row(a)], &[row(b)])
}

/// Degree-preserving endomorphism with `f(1) = 0` and pseudo-random
/// integer images.
fn scrambled(seed: u64, max_degree: usize) -> Endomorphism<Dend, Q> {
    let mut state = seed;
    Endomorphism::from_fn(max_degree, 1, |k: &Pbt| {
        let mut out = E::<Dend>::zero();
        if k.degree() == 0 {
            return out;
        }
        for b in basis::<Dend>(k.degree(), 1).expect("one generator") {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            out.add_term(b, q((state >> 33) as i64 % 5 - 2));
        }
        out
    })
    .expect("one generator")
}

fn convolution() -> Result<String, String> {
    let conv = |mu: Op, f: &Endomorphism<Dend, Q>, g: &Endomorphism<Dend, Q>| {
        Endomorphism::convolution(mu, f, g).map_err(|e| e.to_string())
    };
    let fs: Vec<_> = [11, 23, 37].iter().map(|&s| scrambled(s, 3)).collect();
    let (f, g, h) = (&fs[0], &fs[1], &fs[2]);
    let (pr, su, st) = (Op::Prec, Op::Succ, Op::Star);
    let r1 = (conv(pr, &conv(pr, f, g)?, h)?, conv(pr, f, &conv(st, g, h)?)?);
    let r2 = (conv(pr, &conv(su, f, g)?, h)?, conv(su, f, &conv(pr, g, h)?)?);
    let r3 = (conv(su, &conv(st, f, g)?, h)?, conv(su, f, &conv(su, g, h)?)?);
    for (n, (l, r)) in [r1, r2, r3].iter().enumerate() {
        ensure(l == r, || format!("dendriform relation {} fails for convolution", n + 1))?;
    }
    ensure(*f != *g, || "test endomorphisms coincide".into())?;

    let id = Endomorphism::<As, Q>::identity(4, 2).map_err(|e| e.to_string())?;
    let s = Endomorphism::<As, Q>::antipode(4, 2).map_err(|e| e.to_string())?;
    let e = Endomorphism::<As, Q>::unit_counit(4, 2).map_err(|e| e.to_string())?;
    let l = Endomorphism::convolution(Op::Star, &id, &s).map_err(|e| e.to_string())?;
    let r = Endomorphism::convolution(Op::Star, &s, &id).map_err(|e| e.to_string())?;
    ensure(l == e && r == e, || "id * S differs from u o counit".into())?;
    Ok("dend relations on End up to degree 3; as id*S = S*id = u o counit".into())
}

fn recursion_is_extension() -> Result<String, String> {
    let y = Pbt::y();
    let mut cx = Coproducts::<Dend, Q>::new();
    let dy = cx.key(&y);
    let mut n = 0;
    for t in basis_up_to::<Dend>(4, 1).map_err(|e| e.to_string())? {
        let Some((l, r)) = t.decompose() else { continue };
        let left = tensor_product_mixed::<Dend, Q>(Op::Succ, &cx.key(l), &dy).map_err(|e| e.to_string())?;
        let ext = tensor_product_mixed::<Dend, Q>(Op::Prec, &left, &cx.key(r)).map_err(|e| e.to_string())?;
        ensure(coproduct::<Dend, Q>(&el::<Dend>(&t)) == ext, || format!("differs on {}", t))?;
        n += 1;
    }
    Ok(format!("{} trees up to degree 4", n))
}
