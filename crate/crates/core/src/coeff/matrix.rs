use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{CoeffError, RatFunc};

/// Dense row-major matrix over ℚ(q).
#[derive(Clone, PartialEq, Eq)]
pub struct RFMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl RFMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![RatFunc::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self, CoeffError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(CoeffError::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RatFunc) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[RatFunc] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Appends the rows of `other` below `self`.
    pub fn vstack(&self, other: &RFMatrix) -> Result<Self, CoeffError> {
        if self.cols != other.cols {
            return Err(CoeffError::Shape(format!("{} vs {} columns", self.cols, other.cols)));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Self { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, rhs: &RFMatrix) -> Result<Self, CoeffError> {
        if self.cols != rhs.rows {
            return Err(CoeffError::Shape(format!("{}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Result<Vec<RatFunc>, CoeffError> {
        if v.len() != self.cols {
            return Err(CoeffError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(RatFunc::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, rhs: &RFMatrix) -> Result<Self, CoeffError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(CoeffError::Shape("addition of mismatched shapes".into()));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    /// Reduced row echelon form; returns the matrix and its pivot columns.
    ///
    /// Pivots are chosen by smallest [`RatFunc::weight`] within the column, which
    /// keeps coefficients polynomial as long as a constant pivot is available.
    pub fn rref(&self) -> (RFMatrix, Vec<usize>) {
        let mut rows: Vec<Vec<RatFunc>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(best) = (next..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| rows[r][col].weight())
            else {
                continue;
            };
            rows.swap(next, best);
            let inv = rows[next][col].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for x in rows[next][col..].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &inv;
                    }
                }
            }
            let pivot_row = rows[next].clone();
            let support: Vec<usize> = (col..self.cols).filter(|&c| !pivot_row[c].is_zero()).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for &c in &support {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
            pivots.push(col);
            next += 1;
        }
        let entries = rows.into_iter().flatten().collect();
        (RFMatrix { rows: self.rows, cols: self.cols, entries }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : M v = 0}`.
    ///
    /// Each vector is scaled so its first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<RatFunc>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![RatFunc::zero(); self.cols];
                v[f] = RatFunc::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("free coordinate is 1");
                let inv = lead.inv().expect("nonzero");
                v.iter().map(|x| x * &inv).collect()
            })
            .collect()
    }

    /// Specializes every entry at `q`.
    pub fn eval(&self, q: &BigRational) -> Result<QMatrix, CoeffError> {
        let entries = self.entries.iter().map(|e| e.eval(q)).collect::<Result<_, _>>()?;
        Ok(QMatrix { rows: self.rows, cols: self.cols, entries })
    }
}

impl fmt::Debug for RFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RFMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Dense matrix over ℚ, used for specializations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl QMatrix {
    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> =
            (0..self.rows).map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = BigRational::one() / &m[rank][col];
            let pivot: Vec<BigRational> = m[rank].iter().map(|x| x * &inv).collect();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let f = row[col].clone();
                    for c in col..self.cols {
                        if !pivot[c].is_zero() {
                            row[c] = &row[c] - &f * &pivot[c];
                        }
                    }
                }
            }
            m[rank] = pivot;
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::IntPoly;

    fn c(v: i64) -> RatFunc {
        RatFunc::from_int(v)
    }

    #[test]
    fn kernel_of_one_by_two() {
        let m = RFMatrix::from_rows(vec![vec![c(1), c(-1)]]).unwrap();
        assert_eq!(m.kernel_basis(), vec![vec![c(1), c(1)]]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(RFMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn symbolic_rank_drop() {
        let q = RatFunc::from_poly(IntPoly::q());
        let m = RFMatrix::from_rows(vec![vec![q.clone(), q], vec![c(1), c(1)]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![c(1), c(-1)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RFMatrix::from_rows(vec![vec![c(1)], vec![c(1), c(2)]]).is_err());
    }

    #[test]
    fn rational_rank() {
        let m = RFMatrix::from_rows(vec![vec![c(2), c(4)], vec![c(1), c(2)]]).unwrap();
        let q = BigRational::from_integer(3.into());
        assert_eq!(m.eval(&q).unwrap().rank(), 1);
    }
}
