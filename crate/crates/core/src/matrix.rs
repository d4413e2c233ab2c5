//! Dense symmetric rational matrices and inertia triples.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use num_traits::Zero;
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry ({0}, {1}) differs from its transpose")]
    NotSymmetric(usize, usize),
}

/// A square matrix with `entries[i][j] == entries[j][i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        SymmetricMatrix {
            order,
            entries: alloc::vec![Rational::zero(); order * order],
        }
    }

    /// Checks squareness and symmetry.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let order = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(MatrixError::NotSquare { row, len: r.len(), order });
            }
        }
        for i in 0..order {
            for j in i + 1..order {
                if rows[i][j] != rows[j][i] {
                    return Err(MatrixError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymmetricMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[j * self.order + i] = value.clone();
        self.entries[i * self.order + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.order.max(1)).take(self.order).map(<[_]>::to_vec).collect()
    }

    /// Every entry multiplied by `c`.
    pub fn scaled(&self, c: &Rational) -> Self {
        SymmetricMatrix {
            order: self.order,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// The principal submatrix on the given indices, in the given order.
    pub fn principal(&self, keep: &[usize]) -> Self {
        let mut m = Self::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m.entries[a * keep.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }
}

/// Counts of positive, negative and zero eigenvalues, with multiplicity.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Inertia {
    pub const fn new(pos: usize, neg: usize, zero: usize) -> Self {
        Inertia { pos, neg, zero }
    }

    /// Order of the underlying matrix.
    pub fn order(&self) -> usize {
        self.pos + self.neg + self.zero
    }

    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }

    /// The nullity, i.e. `zero`.
    pub fn nullity(&self) -> usize {
        self.zero
    }
}

impl Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(self.pos + rhs.pos, self.neg + rhs.neg, self.zero + rhs.zero)
    }
}

impl AddAssign for Inertia {
    fn add_assign(&mut self, rhs: Inertia) {
        *self = *self + rhs;
    }
}

impl core::iter::Sum for Inertia {
    fn sum<I: Iterator<Item = Inertia>>(iter: I) -> Inertia {
        iter.fold(Inertia::default(), Add::add)
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.pos, self.neg, self.zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn rejects_asymmetric() {
        let rows = vec![vec![int(0), int(1)], vec![int(2), int(0)]];
        assert_eq!(SymmetricMatrix::from_rows(rows), Err(MatrixError::NotSymmetric(0, 1)));
        let rows = vec![vec![int(0), int(1)], vec![int(1)]];
        assert!(matches!(SymmetricMatrix::from_rows(rows), Err(MatrixError::NotSquare { row: 1, .. })));
    }

    #[test]
    fn rows_roundtrip() {
        let rows = vec![vec![int(1), int(2)], vec![int(2), int(3)]];
        let m = SymmetricMatrix::from_rows(rows.clone()).unwrap();
        assert_eq!(m.rows(), rows);
        assert!(SymmetricMatrix::zeros(0).rows().is_empty());
    }

    #[test]
    fn inertia_arith() {
        let a = Inertia::new(1, 2, 0) + Inertia::new(0, 0, 1);
        assert_eq!(a, Inertia::new(1, 2, 1));
        assert_eq!(a.rank(), 3);
        assert_eq!(a.order(), 4);
        assert_eq!(a.to_string(), "1 2 1");
    }
}
