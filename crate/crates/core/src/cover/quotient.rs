use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::lattice::{hermite_normal_form, smith_normal_form};
use super::CoverError;
use crate::symgroup::{factorial, Composition, Permutation};

/// Finite quotient `ℤ^k / L` of a full-rank lattice `L`, with its coordinate-permutation action.
///
/// Classes are represented by the tuple obtained by reducing against the
/// Hermite basis of `L`: coordinate `i` lands in `[0, p_i)` where `p_i` is the
/// `i`-th pivot. This reduced tuple is the canonical projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroup {
    k: usize,
    relation_lattice: Vec<Vec<i64>>,
    invariant_factors: Vec<i64>,
    order: u64,
}

impl QuotientGroup {
    /// Quotient by the lattice spanned by `generators` (rows); they must span a rank-`k` lattice.
    pub fn from_generators(k: usize, generators: &[Vec<i64>]) -> Result<Self, CoverError> {
        let hnf = hermite_normal_form(generators);
        if hnf.len() != k || (0..k).any(|i| hnf[i][i] == 0) {
            return Err(CoverError::Degenerate(format!("relation lattice has rank {} < {k}", hnf.len())));
        }
        let invariant_factors: Vec<i64> =
            smith_normal_form(&hnf).diag.into_iter().map(i64::abs).filter(|&d| d != 1).collect();
        let order = hnf.iter().enumerate().map(|(i, r)| r[i] as u64).product::<u64>();
        let snf_order: u64 = invariant_factors.iter().map(|&d| d as u64).product();
        if order != snf_order {
            return Err(CoverError::OrderMismatch { what: "hermite vs smith", expected: snf_order, got: order });
        }
        Ok(Self { k, relation_lattice: hnf, invariant_factors, order })
    }

    /// Quotient by `{t ∈ ℤ^k : A t ≡ 0 (mod modulus)}` for a `k × k` matrix `A`.
    pub fn from_congruences(rows: &[Vec<i64>], modulus: i64) -> Result<Self, CoverError> {
        let k = rows.len();
        if k == 0 {
            return Self::from_generators(0, &[]);
        }
        // U A V = D, so A t ≡ 0 iff D (V⁻¹ t) ≡ 0; solutions are V · diag(m_i) ℤ^k.
        let snf = smith_normal_form(rows);
        let mut diag = snf.diag.clone();
        diag.resize(k, 0);
        let gens: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                let m = modulus / modulus.gcd(&diag[i]);
                (0..k).map(|r| snf.v[r][i] * m).collect()
            })
            .collect();
        Self::from_generators(k, &gens)
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    /// Hermite basis of the relation lattice, one generator per row.
    pub fn relation_lattice(&self) -> &[Vec<i64>] {
        &self.relation_lattice
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    fn pivots(&self) -> impl Iterator<Item = i64> + '_ {
        self.relation_lattice.iter().enumerate().map(|(i, r)| r[i])
    }

    /// Canonical tuple of the class of `t`.
    pub fn project(&self, t: &[i64]) -> Vec<i64> {
        let mut v = t.to_vec();
        for (i, row) in self.relation_lattice.iter().enumerate() {
            let q = v[i].div_euclid(row[i]);
            if q != 0 {
                for (x, r) in v.iter_mut().zip(row).skip(i) {
                    *x -= q * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, t: &[i64]) -> bool {
        self.project(t).iter().all(|&x| x == 0)
    }

    /// Mixed-radix index of a canonical tuple; increasing index is lexicographic order.
    pub fn class_index(&self, canonical: &[i64]) -> u64 {
        canonical
            .iter()
            .zip(self.pivots())
            .fold(0u64, |acc, (&x, p)| acc * p as u64 + x as u64)
    }

    pub fn class_from_index(&self, mut idx: u64) -> Vec<i64> {
        let pivots: Vec<i64> = self.pivots().collect();
        let mut out = vec![0; self.k];
        for i in (0..self.k).rev() {
            let p = pivots[i] as u64;
            out[i] = (idx % p) as i64;
            idx /= p;
        }
        out
    }

    /// Order of the class of `t`.
    pub fn element_order(&self, t: &[i64]) -> u64 {
        let mut m = 1u64;
        loop {
            let multiple: Vec<i64> = t.iter().map(|&x| x * m as i64).collect();
            if self.contains(&multiple) {
                return m;
            }
            m += 1;
        }
    }

    /// Whether the relation lattice is stable under every coordinate permutation.
    pub fn is_symmetric(&self) -> bool {
        (1..self.k).all(|i| {
            let s = Permutation::simple(self.k, i).expect("valid index");
            self.relation_lattice.iter().all(|row| self.contains(&s.act(row)))
        })
    }

    /// Point stabilizer of the class of `t` inside 𝔖_k.
    pub fn stabilizer(&self, t: &[i64]) -> Vec<Permutation> {
        let base = self.project(t);
        Permutation::all(self.k).into_iter().filter(|w| self.project(&w.act(t)) == base).collect()
    }

    /// Exhaustive orbit partition under 𝔖_k, in increasing order of canonical representative.
    pub fn orbits(&self, bound: u64) -> Result<Vec<OrbitRecord>, CoverError> {
        if self.order > bound {
            return Err(CoverError::BoundExceeded { order: self.order, bound });
        }
        let perms = Permutation::all(self.k);
        let mut visited = vec![false; self.order as usize];
        let mut out = Vec::new();
        for idx in 0..self.order {
            if visited[idx as usize] {
                continue;
            }
            let rep = self.class_from_index(idx);
            let mut members = HashSet::new();
            let mut stab = 0u64;
            for w in &perms {
                let img = self.project(&w.act(&rep));
                if img == rep {
                    stab += 1;
                }
                members.insert(self.class_index(&img));
            }
            for &m in &members {
                visited[m as usize] = true;
            }
            let size = members.len() as u64;
            debug_assert_eq!(size * stab, factorial(self.k));
            out.push(OrbitRecord {
                stabilizer: self.young_stabilizer(&rep, stab),
                representative: rep,
                size,
                stabilizer_order: stab,
            });
        }
        Ok(out)
    }

    /// Number of 𝔖_k-orbits by Burnside's lemma, `(1/k!) Σ_w |Fix(w)|`.
    pub fn burnside_count(&self, bound: u64) -> Result<u64, CoverError> {
        if self.order > bound {
            return Err(CoverError::BoundExceeded { order: self.order, bound });
        }
        let classes: Vec<Vec<i64>> = (0..self.order).map(|i| self.class_from_index(i)).collect();
        let fixed: u64 = Permutation::all(self.k)
            .iter()
            .map(|w| classes.iter().filter(|t| self.project(&w.act(t)) == **t).count() as u64)
            .sum();
        let g = factorial(self.k);
        if !fixed.is_multiple_of(g) {
            return Err(CoverError::NotIntegral(format!("{fixed}/{g}")));
        }
        Ok(fixed / g)
    }

    /// The stabilizer as a composition when it is the standard Young subgroup
    /// generated by the simple reflections fixing `rep`.
    fn young_stabilizer(&self, rep: &[i64], stab_order: u64) -> Option<Composition> {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 1..self.k {
            let s = Permutation::simple(self.k, i).expect("valid index");
            if self.project(&s.act(rep)) == *rep {
                run += 1;
            } else {
                parts.push(run);
                run = 1;
            }
        }
        if self.k > 0 {
            parts.push(run);
        }
        let c = Composition::new(parts).ok()?;
        (c.young_order() == stab_order).then_some(c)
    }
}

/// One 𝔖_k-orbit in a [`QuotientGroup`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    /// Lexicographically smallest canonical tuple in the orbit.
    pub representative: Vec<i64>,
    pub size: u64,
    /// Standard Young stabilizer of the representative; `None` flags a stabilizer of another shape.
    #[serde(serialize_with = "ser_comp")]
    pub stabilizer: Option<Composition>,
    pub stabilizer_order: u64,
}

fn ser_comp<S: serde::Serializer>(c: &Option<Composition>, s: S) -> Result<S::Ok, S::Error> {
    match c {
        Some(c) => s.collect_seq(c.parts()),
        None => s.serialize_none(),
    }
}

impl fmt::Display for OrbitRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let stab = self.stabilizer.as_ref().map_or_else(|| "non-Young".to_string(), ToString::to_string);
        write!(f, "{:?} size={} stabilizer={}", self.representative, self.size, stab)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn savin_like_quotient() {
        let g = QuotientGroup::from_generators(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.invariant_factors(), &[2, 2]);
        let orbits = g.orbits(100).unwrap();
        let reps: Vec<Vec<i64>> = orbits.iter().map(|o| o.representative.clone()).collect();
        assert_eq!(reps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        let sizes: Vec<u64> = orbits.iter().map(|o| o.size).collect();
        assert_eq!(sizes, vec![1, 2, 1]);
    }

    #[test]
    fn congruence_solution_lattice() {
        // 2 t_i ≡ 0 (mod 4) for each i
        let g = QuotientGroup::from_congruences(&[vec![2, 0], vec![0, 2]], 4).unwrap();
        assert_eq!(g.relation_lattice(), &[vec![2, 0], vec![0, 2]]);
        // trivial system: everything solves it
        let g = QuotientGroup::from_congruences(&[vec![0, 0], vec![0, 0]], 4).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn projection_is_a_homomorphism_with_kernel_the_lattice() {
        let g = QuotientGroup::from_generators(3, &[vec![2, 2, 2], vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4]]).unwrap();
        assert_eq!(g.order(), 32);
        for a in -5..5 {
            for b in -5..5 {
                let x = [a, b, a - b];
                let y = [b, 3, -a];
                let sum: Vec<i64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
                let px = g.project(&x);
                let py = g.project(&y);
                let ps: Vec<i64> = px.iter().zip(&py).map(|(p, q)| p + q).collect();
                assert_eq!(g.project(&sum), g.project(&ps));
            }
        }
        assert!(g.contains(&[2, 2, 2]));
        assert!(g.contains(&[6, -2, 2]));
        assert!(!g.contains(&[2, 0, 0]));
        assert!(g.is_symmetric());
    }

    #[test]
    fn bound_is_enforced() {
        let g = QuotientGroup::from_generators(2, &[vec![10, 0], vec![0, 10]]).unwrap();
        assert!(matches!(g.orbits(50), Err(CoverError::BoundExceeded { .. })));
    }

    #[test]
    fn degenerate_lattice_rejected() {
        assert!(QuotientGroup::from_generators(2, &[vec![1, 1]]).is_err());
    }
}
