use super::{Monomial, Presentation, PresentationError};
use crate::scalar::Scalar;

pub const BUILTIN_NAMES: [&str; 8] = ["dend", "dipt", "noname", "admissible", "predend", "tridend", "2as", "quadri"];

/// Operation vectors with small integer coefficients.
type V = Vec<i64>;

fn e(k: usize, i: usize) -> V {
    (0..k).map(|t| (t == i) as i64).collect()
}

fn sum(vs: &[&V]) -> V {
    (0..vs[0].len()).map(|t| vs.iter().map(|v| v[t]).sum()).collect()
}

/// `(x o1 y) o2 z`
fn l(o1: &V, o2: &V) -> V {
    let k = o1.len();
    let mut v = vec![0; 2 * k * k];
    for i in 0..k {
        for j in 0..k {
            v[Monomial::L(i, j).index(k)] += o1[i] * o2[j];
        }
    }
    v
}

/// `x o1 (y o2 z)`
fn r(o1: &V, o2: &V) -> V {
    let k = o1.len();
    let mut v = vec![0; 2 * k * k];
    for i in 0..k {
        for j in 0..k {
            v[Monomial::R(i, j).index(k)] += o1[i] * o2[j];
        }
    }
    v
}

fn minus(a: V, b: V) -> V {
    a.iter().zip(&b).map(|(x, y)| x - y).collect()
}

fn plus(vs: &[V]) -> V {
    (0..vs[0].len()).map(|t| vs.iter().map(|v| v[t]).sum()).collect()
}

fn build<S: Scalar>(ops: &[&str], alpha: V, beta: V, star: V, rels: Vec<V>) -> Presentation<S> {
    let conv = |v: &V| v.iter().map(|&c| S::from_i64(c)).collect::<Vec<S>>();
    Presentation::new(
        ops.iter().map(|s| s.to_string()).collect(),
        conv(&alpha),
        conv(&beta),
        Some(conv(&star)),
        rels.iter().map(conv).collect(),
    )
    .expect("built-in presentations are valid")
}

/// One of the built-in presentations, by name.
pub fn builtin<S: Scalar>(name: &str) -> Result<Presentation<S>, PresentationError> {
    let p = match name {
        "dend" | "noname" | "admissible" => {
            let (pr, su) = (e(2, 0), e(2, 1));
            let st = sum(&[&pr, &su]);
            let r1 = minus(l(&pr, &pr), r(&pr, &st));
            let r2 = minus(l(&su, &pr), r(&su, &pr));
            let r3 = minus(l(&st, &su), r(&su, &su));
            let rels = match name {
                "dend" => vec![r1, r2, r3],
                "noname" => vec![plus(&[r1, r3]), r2],
                _ => vec![plus(&[r1, r2, r3])],
            };
            build(&["<", ">"], vec![1, 0], vec![0, 1], st, rels)
        }
        "dipt" => {
            let (st, su) = (e(2, 0), e(2, 1));
            let assoc = minus(l(&st, &st), r(&st, &st));
            let dipt = minus(l(&st, &su), r(&su, &su));
            build(&["*", ">"], vec![1, 0], vec![1, 1], st, vec![assoc, dipt])
        }
        "predend" => {
            let (pr, su, st) = (e(3, 0), e(3, 1), e(3, 2));
            let rels = vec![
                minus(l(&st, &st), r(&st, &st)),
                minus(l(&pr, &pr), r(&pr, &st)),
                minus(l(&su, &pr), r(&su, &pr)),
                minus(l(&st, &su), r(&su, &su)),
            ];
            build(&["<", ">", "*"], vec![1, 0, 1], vec![0, 1, 1], st, rels)
        }
        "tridend" => {
            let (pr, su, dot) = (e(3, 0), e(3, 1), e(3, 2));
            let st = sum(&[&pr, &su, &dot]);
            let rels = vec![
                minus(l(&pr, &pr), r(&pr, &st)),
                minus(l(&su, &pr), r(&su, &pr)),
                minus(l(&st, &su), r(&su, &su)),
                minus(l(&su, &dot), r(&su, &dot)),
                minus(l(&pr, &dot), r(&dot, &su)),
                minus(l(&dot, &pr), r(&dot, &pr)),
                minus(l(&dot, &dot), r(&dot, &dot)),
            ];
            build(&["<", ">", "."], vec![1, 0, 0], vec![0, 1, 0], st, rels)
        }
        "2as" => {
            let (st, dot) = (e(2, 0), e(2, 1));
            let rels = vec![minus(l(&st, &st), r(&st, &st)), minus(l(&dot, &dot), r(&dot, &dot))];
            build(&["*", "."], vec![1, 1], vec![1, 1], st, rels)
        }
        "quadri" => {
            let (nw, ne, se, sw) = (e(4, 0), e(4, 1), e(4, 2), e(4, 3));
            let succ = sum(&[&ne, &se]);
            let prec = sum(&[&nw, &sw]);
            let vee = sum(&[&se, &sw]);
            let wedge = sum(&[&ne, &nw]);
            let st = sum(&[&nw, &ne, &se, &sw]);
            let rels = vec![
                minus(l(&nw, &nw), r(&nw, &st)),
                minus(l(&ne, &nw), r(&ne, &prec)),
                minus(l(&wedge, &ne), r(&ne, &succ)),
                minus(l(&sw, &nw), r(&sw, &wedge)),
                minus(l(&se, &nw), r(&se, &nw)),
                minus(l(&vee, &ne), r(&se, &ne)),
                minus(l(&prec, &sw), r(&sw, &vee)),
                minus(l(&succ, &sw), r(&se, &sw)),
                minus(l(&st, &se), r(&se, &se)),
            ];
            build(&["nw", "ne", "se", "sw"], vec![1, 0, 0, 0], vec![0, 0, 1, 0], st, rels)
        }
        other => return Err(PresentationError::UnknownBuiltin(other.to_string())),
    };
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn shapes() {
        let d = builtin::<Rational>("dend").unwrap();
        assert_eq!((d.k(), d.relations().len()), (2, 3));
        let q = builtin::<Rational>("quadri").unwrap();
        assert_eq!((q.k(), q.relations().len()), (4, 9));
        let nonzero_alpha = q.alpha().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
        let nonzero_beta = q.beta().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
        assert_eq!((nonzero_alpha, nonzero_beta), (1, 1));
        assert_eq!(builtin::<Rational>("tridend").unwrap().relations().len(), 7);
        assert_eq!(builtin::<Rational>("predend").unwrap().relations().len(), 4);
        assert!(builtin::<Rational>("pre-lie").is_err());
    }
}
