//! Two independent exact inertia algorithms.
//!
//! [`congruence_inertia`] diagonalises the matrix by simultaneous row and
//! column operations, which preserve inertia. [`descartes_inertia`] instead
//! builds the characteristic polynomial and counts sign changes; because a
//! real symmetric matrix has only real eigenvalues, Descartes' rule of signs
//! is exact there. The two share nothing but the matrix type.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::WeightedGraph;
use crate::matrix::{Inertia, SymmetricMatrix};
use crate::rational::Rational;

/// Inertia by symmetric Gaussian elimination.
///
/// Pivots on the first active index with a nonzero diagonal entry. When the
/// whole active diagonal vanishes but some off-diagonal `a_ij` (smallest
/// `(i, j)` first) does not, row and column `j` are added to row and column
/// `i`, which puts `2 a_ij` on the diagonal.
pub fn congruence_inertia(m: &SymmetricMatrix) -> Inertia {
    let mut a = m.rows();
    let mut active: Vec<usize> = (0..m.order()).collect();
    let (mut pos, mut neg) = (0, 0);

    loop {
        let slot = match active.iter().position(|&i| !a[i][i].is_zero()) {
            Some(slot) => slot,
            None => match first_nonzero_pair(&a, &active) {
                Some((si, sj)) => {
                    let (i, j) = (active[si], active[sj]);
                    for &k in &active {
                        let x = a[j][k].clone();
                        a[i][k] += x;
                    }
                    for &k in &active {
                        let x = a[k][j].clone();
                        a[k][i] += x;
                    }
                    si
                }
                None => break,
            },
        };

        let p = active.remove(slot);
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }

        let col: Vec<Rational> = active.iter().map(|&j| a[j][p].clone() / &d).collect();
        for (x, &j) in active.iter().enumerate() {
            if col[x].is_zero() {
                continue;
            }
            for &k in &active[x..] {
                let delta = &col[x] * &a[p][k];
                a[j][k] -= &delta;
                if j != k {
                    a[k][j] -= delta;
                }
            }
        }
    }

    Inertia::new(pos, neg, active.len())
}

fn first_nonzero_pair(a: &[Vec<Rational>], active: &[usize]) -> Option<(usize, usize)> {
    for (si, &i) in active.iter().enumerate() {
        for (sj, &j) in active.iter().enumerate().skip(si + 1) {
            if !a[i][j].is_zero() {
                return Some((si, sj));
            }
        }
    }
    None
}

/// Coefficients of `det(λI − m)` from degree `n` down to `0`, by the
/// Faddeev–LeVerrier recurrence over the rationals.
pub fn char_poly(m: &SymmetricMatrix) -> Vec<Rational> {
    let n = m.order();
    let a = m.rows();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(Rational::one());
    // m_k = a * m_{k-1} + c_{k-1} I, starting from m_0 = 0
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[k - 1];
        }
        mk = next;
        let trace = (0..n)
            .map(|i| (0..n).map(|j| &a[i][j] * &mk[j][i]).fold(Rational::zero(), |s, x| s + x))
            .fold(Rational::zero(), |s, x| s + x);
        coeffs.push(-trace / Rational::from_integer(BigInt::from(k)));
    }
    coeffs
}

fn mat_mul(x: &[Vec<Rational>], y: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = x.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if x[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !y[k][j].is_zero() {
                    out[i][j] += &x[i][k] * &y[k][j];
                }
            }
        }
    }
    out
}

/// Inertia from sign variations of the characteristic polynomial.
pub fn descartes_inertia(m: &SymmetricMatrix) -> Inertia {
    let n = m.order();
    let mut coeffs = char_poly(m);
    let mut zero = 0;
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
        zero += 1;
    }
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(Signed::is_positive).collect();
    let pos = signs.windows(2).filter(|w| w[0] != w[1]).count();
    Inertia::new(pos, n - pos - zero, zero)
}

/// [`congruence_inertia`] of the adjacency matrix.
pub fn graph_inertia(g: &WeightedGraph) -> Inertia {
    congruence_inertia(&g.adjacency_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> SymmetricMatrix {
        SymmetricMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn cycle(weights: &[i64]) -> WeightedGraph {
        let n = weights.len();
        WeightedGraph::from_edges(n, weights.iter().enumerate().map(|(i, &w)| (i, (i + 1) % n, int(w)))).unwrap()
    }

    #[test]
    fn congruence_examples() {
        assert_eq!(congruence_inertia(&m(&[&[0, 1], &[1, 0]])), Inertia::new(1, 1, 0));
        assert_eq!(graph_inertia(&cycle(&[1, 1, 1])), Inertia::new(1, 2, 0));
        assert_eq!(graph_inertia(&cycle(&[2, 1, 1, 1])), Inertia::new(2, 2, 0));
        assert_eq!(congruence_inertia(&m(&[&[0]])), Inertia::new(0, 0, 1));
        assert_eq!(congruence_inertia(&SymmetricMatrix::zeros(0)), Inertia::new(0, 0, 0));
    }

    #[test]
    fn char_poly_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
        assert_eq!(char_poly(&m(&[&[0, 1], &[1, 0]])), ints(&[1, 0, -1]));
        // (λ - 2)(λ + 1)^2 expanded by hand
        assert_eq!(char_poly(&cycle(&[1, 1, 1]).adjacency_matrix()), ints(&[1, 0, -3, -2]));
        assert_eq!(char_poly(&m(&[&[0]])), ints(&[1, 0]));
        assert_eq!(char_poly(&m(&[&[3, 1], &[1, 3]])), ints(&[1, -6, 8]));
    }

    #[test]
    fn descartes_examples() {
        assert_eq!(descartes_inertia(&cycle(&[1, 1, 1]).adjacency_matrix()), Inertia::new(1, 2, 0));
        assert_eq!(descartes_inertia(&SymmetricMatrix::zeros(3)), Inertia::new(0, 0, 3));
        let k23 = WeightedGraph::unit(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(descartes_inertia(&k23.adjacency_matrix()), Inertia::new(1, 1, 3));
        assert_eq!(graph_inertia(&k23), Inertia::new(1, 1, 3));
    }

    #[test]
    fn definite_and_diagonal() {
        assert_eq!(congruence_inertia(&m(&[&[-2, 0], &[0, 5]])), Inertia::new(1, 1, 0));
        assert_eq!(congruence_inertia(&m(&[&[2, 1], &[1, 2]])), Inertia::new(2, 0, 0));
        assert_eq!(congruence_inertia(&m(&[&[1, 1], &[1, 1]])), Inertia::new(1, 0, 1));
        assert_eq!(descartes_inertia(&m(&[&[1, 1], &[1, 1]])), Inertia::new(1, 0, 1));
    }

    fn arb_symmetric(max: usize) -> impl Strategy<Value = SymmetricMatrix> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec((-3i64..=3, 1i64..=3), n * n).prop_map(move |raw| {
                let mut s = SymmetricMatrix::zeros(n);
                for i in 0..n {
                    for j in i..n {
                        let (p, q) = raw[i * n + j];
                        // sparse-ish: many exact zeros exercise the pair pivot
                        let v = if (p + q) % 3 == 0 { int(0) } else { frac(p, q) };
                        s.set(i, j, v);
                    }
                }
                s
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn routes_agree(mat in arb_symmetric(7)) {
            let a = congruence_inertia(&mat);
            prop_assert_eq!(a, descartes_inertia(&mat));
            prop_assert_eq!(a.order(), mat.order());
        }

        #[test]
        fn positive_scaling_invariant(mat in arb_symmetric(6), p in 1i64..9, q in 1i64..9) {
            prop_assert_eq!(congruence_inertia(&mat.scaled(&frac(p, q))), congruence_inertia(&mat));
        }

        #[test]
        fn negation_swaps_signs(mat in arb_symmetric(6)) {
            let a = congruence_inertia(&mat);
            let b = congruence_inertia(&mat.scaled(&int(-1)));
            prop_assert_eq!(b, Inertia::new(a.neg, a.pos, a.zero));
        }
    }
}
