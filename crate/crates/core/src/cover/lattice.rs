//! Smith and Hermite normal forms over ℤ for the small lattices that appear here.

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: Vec<Vec<i64>>,
    pub diag: Vec<i64>,
    pub v: Vec<Vec<i64>>,
    pub v_inv: Vec<Vec<i64>>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

fn narrow(m: Vec<Vec<i128>>) -> Vec<Vec<i64>> {
    m.into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("lattice entry overflow")).collect())
        .collect()
}

struct Work {
    a: Vec<Vec<i128>>,
    u: Vec<Vec<i128>>,
    v: Vec<Vec<i128>>,
    v_inv: Vec<Vec<i128>>,
    rows: usize,
    cols: usize,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.v.iter_mut()) {
            r.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    /// row_j += c * row_i
    fn add_row(&mut self, j: usize, i: usize, c: i128) {
        for col in 0..self.cols {
            self.a[j][col] += c * self.a[i][col];
        }
        for col in 0..self.rows {
            self.u[j][col] += c * self.u[i][col];
        }
    }

    /// col_j += c * col_i
    fn add_col(&mut self, j: usize, i: usize, c: i128) {
        for r in 0..self.rows {
            self.a[r][j] += c * self.a[r][i];
        }
        for r in 0..self.cols {
            self.v[r][j] += c * self.v[r][i];
        }
        for col in 0..self.cols {
            self.v_inv[i][col] -= c * self.v_inv[j][col];
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -*x;
        }
    }
}

pub fn smith_normal_form(a: &[Vec<i64>]) -> Snf {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut w = Work {
        a: a.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect(),
        u: identity(rows),
        v: identity(cols),
        v_inv: identity(cols),
        rows,
        cols,
    };
    let steps = rows.min(cols);
    let mut t = 0;
    while t < steps {
        // smallest nonzero entry in the trailing block
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| w.a[r][c] != 0)
            .min_by_key(|&(r, c)| w.a[r][c].abs())
        else {
            break;
        };
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        let mut clean = true;
        for r in t + 1..rows {
            let q = w.a[r][t].div_euclid(w.a[t][t]);
            if q != 0 {
                w.add_row(r, t, -q);
            }
            clean &= w.a[r][t] == 0;
        }
        for c in t + 1..cols {
            let q = w.a[t][c].div_euclid(w.a[t][t]);
            if q != 0 {
                w.add_col(c, t, -q);
            }
            clean &= w.a[t][c] == 0;
        }
        if !clean {
            continue;
        }
        let p = w.a[t][t];
        let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| w.a[r][c] % p != 0));
        if let Some(r) = bad {
            w.add_row(t, r, 1);
            continue;
        }
        if p < 0 {
            w.negate_row(t);
        }
        t += 1;
    }
    let diag = (0..steps).map(|i| i64::try_from(w.a[i][i]).expect("overflow")).collect();
    Snf { u: narrow(w.u), diag, v: narrow(w.v), v_inv: narrow(w.v_inv) }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Row-style Hermite normal form of a full-column-rank integer matrix: upper
/// triangular, positive pivots, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == m.len() {
            break;
        }
        for r in pivot_row + 1..m.len() {
            if m[r][col] == 0 {
                continue;
            }
            let (a, b) = (m[pivot_row][col], m[r][col]);
            let (g, x, y) = ext_gcd(a, b);
            let (p, q) = (a / g, b / g);
            let top: Vec<i128> = (0..cols).map(|c| x * m[pivot_row][c] + y * m[r][c]).collect();
            let bot: Vec<i128> = (0..cols).map(|c| -q * m[pivot_row][c] + p * m[r][c]).collect();
            m[pivot_row] = top;
            m[r] = bot;
        }
        if m[pivot_row][col] == 0 {
            continue;
        }
        if m[pivot_row][col] < 0 {
            for x in m[pivot_row].iter_mut() {
                *x = -*x;
            }
        }
        let p = m[pivot_row][col];
        for r in 0..pivot_row {
            let q = m[r][col].div_euclid(p);
            if q != 0 {
                let pivot = m[pivot_row].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= q * y;
                }
            }
        }
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    narrow(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        (0..a.len())
            .map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|l| a[i][l] * b[l][j]).sum()).collect())
            .collect()
    }

    fn check(a: Vec<Vec<i64>>) {
        let snf = smith_normal_form(&a);
        let d = matmul(&matmul(&snf.u, &a), &snf.v);
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(x, snf.diag[i]);
                } else {
                    assert_eq!(x, 0);
                }
            }
        }
        for w in snf.diag.windows(2) {
            assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0), "{:?}", snf.diag);
        }
        let n = snf.v.len();
        let id = matmul(&snf.v, &snf.v_inv);
        for (i, row) in id.iter().enumerate().take(n) {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, i64::from(i == j));
            }
        }
    }

    #[test]
    fn snf_examples() {
        check(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        check(vec![vec![0, 0], vec![0, 0]]);
        check(vec![vec![-1, 1], vec![1, -1]]);
        check(vec![vec![4, 0], vec![0, 6]]);
        check(vec![vec![3, -1, -1], vec![-1, 3, -1], vec![-1, -1, 3]]);
        let d = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).diag;
        assert_eq!(d, vec![2, 6, 12]);
        assert_eq!(smith_normal_form(&[vec![4, 0], vec![0, 6]]).diag, vec![2, 12]);
    }

    #[test]
    fn hnf_examples() {
        let h = hermite_normal_form(&[vec![4, 0], vec![2, 2]]);
        assert_eq!(h, vec![vec![2, 2], vec![0, 4]]);
        let h = hermite_normal_form(&[vec![2, 0], vec![0, 2], vec![1, 1]]);
        assert_eq!(h, vec![vec![1, 1], vec![0, 2]]);
    }
}
