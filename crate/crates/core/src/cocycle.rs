//! Tame local-field arithmetic: the `n`-th Hilbert symbol and the determinant and
//! Kazhdan-Patterson 2-cocycles restricted to diagonal tori.
//!
//! `F^×` is modelled modulo 1-units as `ℤ × ℤ/(q−1)`: an element `ϖ^a · g^x · (1-unit)`
//! is stored as `(a, x)` for a fixed generator `g` of the residue units. The symbol
//! is the tame symbol
//!
//! ```text
//! (u, v)_n = [ (−1)^{ab} · ū^b · v̄^{−a} ]^{(q−1)/n},   a = val u, b = val v
//! ```
//!
//! and an element `ζ^e` of `μ_n` is stored as `e mod n` with `ζ = g^{(q−1)/n}`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("n = {n} must be positive and divide q - 1 = {qm1}")]
    BadDegree { n: u64, qm1: u64 },
    #[error("torus lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

/// Residue field of size `q` and the degree `n | q − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldModel {
    q: u64,
    n: u64,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|p| q.is_multiple_of(*p)).expect("q >= 2 has a prime factor");
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

impl FieldModel {
    pub fn new(q: u64, n: u64) -> Result<Self, CocycleError> {
        if !is_prime_power(q) {
            return Err(CocycleError::NotPrimePower(q));
        }
        if n == 0 || !(q - 1).is_multiple_of(n) {
            return Err(CocycleError::BadDegree { n, qm1: q - 1 });
        }
        Ok(Self { q, n })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Modulus of the unit exponent, `q − 1`.
    pub fn unit_modulus(&self) -> u64 {
        self.q - 1
    }

    pub fn elem(&self, valuation: i64, unit_exp: i64) -> FieldElem {
        FieldElem { valuation, unit_exp: unit_exp.rem_euclid(self.unit_modulus() as i64) }
    }

    pub fn uniformizer(&self) -> FieldElem {
        self.elem(1, 0)
    }

    pub fn one(&self) -> FieldElem {
        self.elem(0, 0)
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.elem(a.valuation + b.valuation, a.unit_exp + b.unit_exp)
    }

    pub fn pow(&self, a: &FieldElem, e: i64) -> FieldElem {
        self.elem(a.valuation * e, a.unit_exp * e)
    }

    pub fn mu(&self, exp: i64) -> MuN {
        MuN { exp: exp.rem_euclid(self.n as i64) as u64, n: self.n }
    }

    /// Exponent of `−1` with respect to the fixed generator.
    fn minus_one_exp(&self) -> i64 {
        if self.q.is_multiple_of(2) {
            0
        } else {
            (self.q as i64 - 1) / 2
        }
    }

    pub fn hilbert(&self, u: &FieldElem, v: &FieldElem) -> MuN {
        let (a, b) = (u.valuation, v.valuation);
        let m = self.unit_modulus() as i64;
        let sign = (a * b).rem_euclid(2) * self.minus_one_exp();
        let residue = (sign + u.unit_exp * b - v.unit_exp * a).rem_euclid(m);
        // raising g^residue to (q−1)/n gives ζ^residue
        self.mu(residue)
    }

    fn check_lengths(t: &[FieldElem], t2: &[FieldElem]) -> Result<(), CocycleError> {
        if t.len() != t2.len() {
            return Err(CocycleError::LengthMismatch(t.len(), t2.len()));
        }
        Ok(())
    }

    fn product(&self, t: &[FieldElem]) -> FieldElem {
        t.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// `(det t, det t′)_n`.
    pub fn sigma_det_torus(&self, t: &[FieldElem], t2: &[FieldElem]) -> Result<MuN, CocycleError> {
        Self::check_lengths(t, t2)?;
        Ok(self.hilbert(&self.product(t), &self.product(t2)))
    }

    /// `∏_{i<j} (t_i, t′_j)_n`.
    pub fn sigma_kp_torus(&self, t: &[FieldElem], t2: &[FieldElem]) -> Result<MuN, CocycleError> {
        Self::check_lengths(t, t2)?;
        let mut acc = self.mu(0);
        for (i, ti) in t.iter().enumerate() {
            for tj in &t2[i + 1..] {
                acc = acc * self.hilbert(ti, tj);
            }
        }
        Ok(acc)
    }

    /// `σ_det^c · σ_KP^d`.
    pub fn sigma_cover_torus(&self, c: i64, d: i64, t: &[FieldElem], t2: &[FieldElem]) -> Result<MuN, CocycleError> {
        Ok(self.sigma_det_torus(t, t2)?.pow(c) * self.sigma_kp_torus(t, t2)?.pow(d))
    }

    /// `σ(t, t′) σ(t′, t)^{−1}`.
    pub fn commutator_torus(&self, c: i64, d: i64, t: &[FieldElem], t2: &[FieldElem]) -> Result<MuN, CocycleError> {
        Ok(self.sigma_cover_torus(c, d, t, t2)? * self.sigma_cover_torus(c, d, t2, t)?.inverse())
    }

    /// Representatives of `F^×/F^{×n}`: `(a, x)` with `a, x ∈ [0, n)`.
    pub fn square_classes(&self) -> Vec<FieldElem> {
        let n = self.n as i64;
        (0..n).flat_map(|a| (0..n).map(move |x| (a, x))).map(|(a, x)| self.elem(a, x)).collect()
    }

    /// The pairing table on `F^×/F^{×n}`, indexed like [`square_classes`](Self::square_classes).
    pub fn pairing_table(&self) -> Vec<Vec<MuN>> {
        let classes = self.square_classes();
        classes.iter().map(|u| classes.iter().map(|v| self.hilbert(u, v)).collect()).collect()
    }

    /// Every nontrivial class pairs nontrivially with some class.
    pub fn is_nondegenerate(&self) -> bool {
        let table = self.pairing_table();
        table.iter().enumerate().all(|(i, row)| i == 0 || row.iter().any(|m| !m.is_one()))
    }
}

/// Element of `F^×` modulo 1-units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldElem {
    pub valuation: i64,
    pub unit_exp: i64,
}

impl FieldElem {
    pub fn is_unit(&self) -> bool {
        self.valuation == 0
    }
}

/// `ζ^exp ∈ μ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MuN {
    pub exp: u64,
    pub n: u64,
}

impl MuN {
    pub fn is_one(&self) -> bool {
        self.exp == 0
    }

    pub fn pow(self, e: i64) -> MuN {
        let n = self.n as i64;
        MuN { exp: (self.exp as i64 * e.rem_euclid(n)).rem_euclid(n) as u64, n: self.n }
    }

    pub fn inverse(self) -> MuN {
        self.pow(-1)
    }

    /// Multiplicative order as a group element, independent of the chosen generator.
    pub fn order(&self) -> u64 {
        self.n / self.n.gcd(&self.exp)
    }
}

impl std::ops::Mul for MuN {
    type Output = MuN;
    fn mul(self, rhs: MuN) -> MuN {
        debug_assert_eq!(self.n, rhs.n);
        MuN { exp: (self.exp + rhs.exp) % self.n, n: self.n }
    }
}

impl fmt::Display for MuN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta^{} (order {})", self.exp, self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_validation() {
        assert!(FieldModel::new(5, 4).is_ok());
        assert!(FieldModel::new(9, 8).is_ok());
        assert_eq!(FieldModel::new(6, 5), Err(CocycleError::NotPrimePower(6)));
        assert!(matches!(FieldModel::new(7, 4), Err(CocycleError::BadDegree { .. })));
    }

    #[test]
    fn units_pair_trivially() {
        let fm = FieldModel::new(13, 4).unwrap();
        for x in 0..12 {
            for y in 0..12 {
                assert!(fm.hilbert(&fm.elem(0, x), &fm.elem(0, y)).is_one());
            }
        }
    }

    #[test]
    fn uniformizer_with_itself() {
        // (π, π) = (−1)^{(q−1)/n}-power of −1: in F_5^× with generator 2, −1 = 2^2.
        let fm = FieldModel::new(5, 4).unwrap();
        let pi = fm.uniformizer();
        let v = fm.hilbert(&pi, &pi);
        assert_eq!(v.exp, 2);
        assert_eq!(v.order(), 2);
    }

    #[test]
    fn kp_single_term() {
        let fm = FieldModel::new(5, 4).unwrap();
        let (pi, one) = (fm.uniformizer(), fm.one());
        let v = fm.sigma_kp_torus(&[pi, one], &[one, pi]).unwrap();
        assert_eq!(v, fm.mu(2));
        assert!(fm.sigma_kp_torus(&[pi], &[pi]).unwrap().is_one());
    }

    #[test]
    fn length_mismatch() {
        let fm = FieldModel::new(5, 4).unwrap();
        assert!(fm.sigma_det_torus(&[fm.one()], &[]).is_err());
    }

    #[test]
    fn degenerate_exponents() {
        let fm = FieldModel::new(7, 3).unwrap();
        let t = [fm.elem(1, 2), fm.elem(-1, 5)];
        let t2 = [fm.elem(2, 1), fm.elem(0, 4)];
        assert!(fm.sigma_cover_torus(0, 0, &t, &t2).unwrap().is_one());
        assert!(fm.commutator_torus(1, 1, &t, &t).unwrap().is_one());
    }
}
