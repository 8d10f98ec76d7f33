//! Finite sets modeling the complex embeddings of a number field: a right
//! action of the Galois group commuting with an involution (complex
//! conjugation). The eigenspaces of the involution on the rational span of
//! the points are the Galois representations whose invariants drive every
//! order-of-vanishing computation downstream.
//!
//! Two independent computation paths are provided on purpose:
//! `y_character` evaluates a closed projector-trace formula, while `y_space`
//! constructs explicit eigenspace bases and action matrices. Their agreement
//! is an acceptance gate, not an assumption.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::numtheory::gcd;
use crate::exact::{rat, Cyclotomic, CycloMatrix};
use crate::groups::{unit_group, Character, FiniteGroup};

/// A finite set with a right group action and a commuting involution.
#[derive(Debug, Clone)]
pub struct EmbeddingSet {
    group: Arc<FiniteGroup>,
    size: usize,
    /// `action[g][p]` is the image of point `p` under group element `g`.
    action: Vec<Vec<usize>>,
    involution: Vec<usize>,
}

impl EmbeddingSet {
    /// The torsor model: points are the group elements themselves, the group
    /// acts by right multiplication, and the involution is left
    /// multiplication by `conjugation` (an element of order dividing 2).
    /// Left and right multiplications commute, so the compatibility
    /// invariant holds by construction.
    pub fn from_galois_over_q(group: &Arc<FiniteGroup>, conjugation: usize) -> Result<Self> {
        if conjugation >= group.size() {
            return Err(Error::InvalidArgument(format!(
                "conjugation element {conjugation} out of range"
            )));
        }
        if group.mul(conjugation, conjugation) != group.identity() {
            return Err(Error::ConjugationNotInvolutive(conjugation));
        }
        let size = group.size();
        let action: Vec<Vec<usize>> = (0..size)
            .map(|g| (0..size).map(|p| group.mul(p, g)).collect())
            .collect();
        let involution: Vec<usize> = (0..size).map(|p| group.mul(conjugation, p)).collect();
        Ok(EmbeddingSet {
            group: Arc::clone(group),
            size,
            action,
            involution,
        })
    }

    /// Validate explicit action and involution tables. Every invariant
    /// violation is reported with the offending pair.
    pub fn from_tables(
        group: &Arc<FiniteGroup>,
        size: usize,
        action: Vec<Vec<usize>>,
        involution: Vec<usize>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidEmbeddingTables("empty point set".into()));
        }
        if action.len() != group.size() {
            return Err(Error::InvalidEmbeddingTables(format!(
                "action table has {} rows for a group of size {}",
                action.len(),
                group.size()
            )));
        }
        for (g, row) in action.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidEmbeddingTables(format!(
                    "action row {g} has length {}, expected {size}",
                    row.len()
                )));
            }
            if let Some(&p) = row.iter().find(|&&p| p >= size) {
                return Err(Error::InvalidEmbeddingTables(format!(
                    "action row {g} maps onto out-of-range point {p}"
                )));
            }
        }
        if involution.len() != size || involution.iter().any(|&p| p >= size) {
            return Err(Error::InvalidEmbeddingTables(
                "involution table has wrong length or range".into(),
            ));
        }
        let e = group.identity();
        for p in 0..size {
            if action[e][p] != p {
                return Err(Error::InvalidEmbeddingTables(format!(
                    "identity moves point {p} to {}",
                    action[e][p]
                )));
            }
        }
        for g in 0..group.size() {
            for h in 0..group.size() {
                let gh = group.mul(g, h);
                for p in 0..size {
                    if action[h][action[g][p]] != action[gh][p] {
                        return Err(Error::InvalidEmbeddingTables(format!(
                            "right-action law fails at (g={g}, h={h}, point={p})"
                        )));
                    }
                }
            }
        }
        for p in 0..size {
            if involution[involution[p]] != p {
                return Err(Error::InvalidEmbeddingTables(format!(
                    "involution squared moves point {p} to {}",
                    involution[involution[p]]
                )));
            }
        }
        for g in 0..group.size() {
            for p in 0..size {
                if involution[action[g][p]] != action[g][involution[p]] {
                    return Err(Error::InvalidEmbeddingTables(format!(
                        "involution does not commute with the action at (g={g}, point={p})"
                    )));
                }
            }
        }
        Ok(EmbeddingSet {
            group: Arc::clone(group),
            size,
            action,
            involution,
        })
    }

    /// Embeddings of the N-th cyclotomic field carrying only the involution:
    /// the trivial group acts, points are the coprime residues, and the
    /// involution pairs a residue with its negative. This is the data whose
    /// invariants reproduce the rank table of the field itself.
    pub fn cyclotomic_embeddings(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let group = FiniteGroup::trivial();
        if n <= 2 {
            return EmbeddingSet::from_tables(&group, 1, vec![vec![0]], vec![0]);
        }
        let residues: Vec<u64> = (1..n).filter(|&a| gcd(a, n) == 1).collect();
        let size = residues.len();
        let index = |r: u64| residues.iter().position(|&x| x == r).unwrap();
        let involution: Vec<usize> = residues.iter().map(|&a| index(n - a)).collect();
        EmbeddingSet::from_tables(&group, size, vec![(0..size).collect()], involution)
    }

    /// The torsor model for the N-th cyclotomic field over the rationals:
    /// the unit group acts on itself and conjugation is the residue N - 1.
    pub fn cyclotomic_torsor(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let group = unit_group(n);
        let w = if n <= 2 {
            group.identity()
        } else {
            group
                .index_of_label(n - 1)
                .expect("residue N-1 is coprime to N")
        };
        EmbeddingSet::from_galois_over_q(&group, w)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, g: usize, p: usize) -> usize {
        self.action[g][p]
    }

    pub fn involution(&self, p: usize) -> usize {
        self.involution[p]
    }

    /// `(r1, r2)`: the number of involution-fixed points and the number of
    /// swapped pairs.
    pub fn signature(&self) -> Result<(u64, u64)> {
        let r1 = (0..self.size).filter(|&p| self.involution[p] == p).count();
        let rest = self.size - r1;
        if rest % 2 != 0 {
            return Err(Error::InvolutionParity { unpaired: rest });
        }
        Ok((r1 as u64, (rest / 2) as u64))
    }

    pub fn is_totally_real(&self) -> bool {
        (0..self.size).all(|p| self.involution[p] == p)
    }

    pub fn is_totally_complex(&self) -> bool {
        (0..self.size).all(|p| self.involution[p] != p)
    }

    /// The permutation character of the group action: `g` maps to its
    /// fixed-point count.
    pub fn permutation_character(&self) -> Character {
        let values = (0..self.group.size())
            .map(|g| {
                let fixed = (0..self.size).filter(|&p| self.action[g][p] == p).count();
                Cyclotomic::from_integer(fixed as i64)
            })
            .collect();
        Character::new(Arc::clone(&self.group), values)
            .expect("permutation traces form a class function")
    }

    /// Character of the group action on the `(-1)^n`-eigenspace of the
    /// involution inside the rational span of the points, by the
    /// projector-trace formula
    /// `chi(g) = (|Fix g| + (-1)^n |{p : involution(p . g) = p}|) / 2`.
    /// Only the parity of `n` matters. Degree is `r1 + r2` for even `n`
    /// and `r2` for odd `n`.
    pub fn y_character(&self, n: i64) -> Character {
        let sign = if n.rem_euclid(2) == 0 { 1i64 } else { -1i64 };
        let values = (0..self.group.size())
            .map(|g| {
                let fixed = (0..self.size).filter(|&p| self.action[g][p] == p).count() as i64;
                let twisted = (0..self.size)
                    .filter(|&p| self.involution[self.action[g][p]] == p)
                    .count() as i64;
                Cyclotomic::from_rational(rat(fixed + sign * twisted, 2))
            })
            .collect();
        Character::new(Arc::clone(&self.group), values)
            .expect("eigenspace traces form a class function")
    }

    /// Explicit basis of the `(-1)^n`-eigenspace and the matrices of every
    /// group element restricted to that basis. This is the brute-force
    /// oracle for `y_character`: the trace of each returned matrix equals
    /// the corresponding character value.
    pub fn y_space(&self, n: i64) -> Result<(CycloMatrix, Vec<CycloMatrix>)> {
        let eps = if n.rem_euclid(2) == 0 { 1i64 } else { -1i64 };
        let size = self.size;
        // involution matrix C with (C v)_p = v_{involution(p)}
        let mut c = CycloMatrix::zeros(size, size);
        for p in 0..size {
            *c.at_mut(p, self.involution[p]) = Cyclotomic::one(1);
        }
        let shifted = c.sub(&CycloMatrix::identity(size).scale(&rat(eps, 1)))?;
        let basis = shifted.kernel_basis();
        let mut actions = Vec::with_capacity(self.group.size());
        for g in 0..self.group.size() {
            // (M_g v)_p = v_{p . g}
            let mut m = CycloMatrix::zeros(size, size);
            for p in 0..size {
                *m.at_mut(p, self.action[g][p]) = Cyclotomic::one(1);
            }
            let mapped = m.mul(&basis)?;
            let restricted = if basis.cols() == 0 {
                CycloMatrix::zeros(0, 0)
            } else {
                basis.solve_exact(&mapped)?
            };
            actions.push(restricted);
        }
        Ok((basis, actions))
    }

    /// Character of the even eigenspace minus one trivial summand. The even
    /// eigenspace always contains the all-ones vector as a group-fixed
    /// line, and the quotient map onto it is equivariant, so the character
    /// of the complementary hyperplane is forced: degree `r1 + r2 - 1`.
    pub fn reduced_y0_character(&self) -> Character {
        let y0 = self.y_character(0);
        y0.minus(&Character::trivial(Arc::clone(&self.group)))
            .expect("even eigenspace contains the trivial line")
    }
}
