//! Finite commutative rings modeled as products of chain rings.
//!
//! A factor with `n` non-trivial ideals has the ideal chain
//! `0 ⊂ I_1 ⊂ … ⊂ I_n ⊂ R_i`, encoded as levels `0..=n+1`. A field is the
//! factor with `n = 0`. Only the ideal lattice is modeled: intersection in a
//! chain is the smaller ideal, so ideal vectors intersect componentwise by
//! minimum.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const DEFAULT_VERTEX_BUDGET: usize = 512;

/// The ring `R ≅ R_1 × … × R_k`, one chain length per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    factors: Vec<u32>,
}

impl RingSpec {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptySpec);
        }
        Ok(RingSpec { factors })
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Number of non-field factors.
    pub fn non_fields(&self) -> usize {
        self.factors.iter().filter(|&&n| n >= 1).count()
    }

    pub fn fields(&self) -> usize {
        self.factors.iter().filter(|&&n| n == 0).count()
    }

    /// Top level of factor `i` (the whole factor `R_i`).
    pub fn top(&self, i: usize) -> u32 {
        self.factors[i] + 1
    }

    /// Total number of ideals, `Π(n_i + 2)`, saturating at `u128::MAX`.
    pub fn ideal_count(&self) -> u128 {
        self.factors
            .iter()
            .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128 + 2))
            .unwrap_or(u128::MAX)
    }

    /// Number of non-trivial ideals, i.e. the order of `G(R)`.
    pub fn vertex_count(&self) -> u128 {
        self.ideal_count() - 2
    }

    /// Same ring with factors sorted non-increasing (non-fields first).
    pub fn canonical(&self) -> RingSpec {
        let mut factors = self.factors.clone();
        factors.sort_unstable_by(|a, b| b.cmp(a));
        RingSpec { factors }
    }

    pub fn zero(&self) -> IdealVector {
        IdealVector::new(vec![0; self.factors.len()])
    }

    pub fn whole(&self) -> IdealVector {
        IdealVector::new((0..self.factors.len()).map(|i| self.top(i)).collect())
    }

    /// Checks length and per-factor level range.
    pub fn check(&self, ideal: &IdealVector) -> Result<()> {
        if ideal.len() != self.factor_count() {
            return Err(Error::LengthMismatch {
                left: ideal.len(),
                right: self.factor_count(),
            });
        }
        for (i, &l) in ideal.levels().iter().enumerate() {
            if l > self.top(i) {
                return Err(Error::LevelOutOfRange {
                    factor: i,
                    level: l,
                    max: self.top(i),
                });
            }
        }
        Ok(())
    }

    /// True iff the ideal is a vertex of `G(R)`: in range, non-zero and proper.
    pub fn is_vertex(&self, ideal: &IdealVector) -> bool {
        self.check(ideal).is_ok() && !ideal.is_zero() && *ideal != self.whole()
    }

    /// All non-trivial ideals in lexicographic order of their level tuples.
    pub fn enumerate_vertices(&self, budget: usize) -> Result<Vec<IdealVector>> {
        let vertices = self.vertex_count();
        if vertices > budget as u128 {
            return Err(Error::VertexBudget { vertices, budget });
        }
        let whole = self.whole();
        let mut out = Vec::with_capacity(vertices as usize);
        let mut cur = vec![0u32; self.factor_count()];
        loop {
            // odometer increment, last factor fastest
            let mut pos = cur.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if cur[pos] < self.top(pos) {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = 0;
            }
            if cur == whole.levels {
                return Ok(out);
            }
            out.push(IdealVector::new(cur.clone()));
        }
    }

    /// `I^c`: zero components become the whole factor, non-zero ones become
    /// zero. A full-support ideal has the zero ideal as its complement.
    pub fn complement(&self, ideal: &IdealVector) -> Result<IdealVector> {
        self.check(ideal)?;
        if !self.is_vertex(ideal) {
            return Err(Error::TrivialIdeal(ideal.to_string()));
        }
        Ok(IdealVector::new(
            ideal
                .levels()
                .iter()
                .enumerate()
                .map(|(i, &l)| if l == 0 { self.top(i) } else { 0 })
                .collect(),
        ))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|n| n.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Parses comma-separated chain lengths, e.g. `"0,0,0"` or `"2,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::EmptySpec);
        }
        let factors = trimmed
            .split(',')
            .map(|part| {
                part.trim().parse::<u32>().map_err(|e| Error::ParseSpec {
                    input: s.to_string(),
                    reason: format!("{:?}: {e}", part.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        RingSpec::new(factors)
    }
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// An ideal of `R`, one chain level per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealVector {
    levels: Vec<u32>,
}

impl IdealVector {
    pub fn new(levels: Vec<u32>) -> Self {
        IdealVector { levels }
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(|&l| l == 0)
    }

    /// Componentwise minimum; may be the zero ideal.
    pub fn intersect(&self, other: &IdealVector) -> Result<IdealVector> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(IdealVector::new(
            self.levels
                .iter()
                .zip(&other.levels)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        ))
    }

    /// Non-zero intersection without allocating. Lengths must agree.
    pub fn meets(&self, other: &IdealVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.levels
            .iter()
            .zip(&other.levels)
            .any(|(&a, &b)| a != 0 && b != 0)
    }

    pub fn zero_pattern(&self) -> ZeroPattern {
        ZeroPattern {
            bits: self.levels.iter().map(|&l| l == 0).collect(),
        }
    }

    /// Number of zero components.
    pub fn nzc(&self) -> usize {
        self.levels.iter().filter(|&&l| l == 0).count()
    }

    /// Classmates share the same zero pattern.
    pub fn same_class(&self, other: &IdealVector) -> bool {
        self.len() == other.len()
            && self
                .levels
                .iter()
                .zip(&other.levels)
                .all(|(&a, &b)| (a == 0) == (b == 0))
    }
}

impl fmt::Display for IdealVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which components of an ideal vector are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroPattern {
    bits: Vec<bool>,
}

impl ZeroPattern {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn negate(&self) -> ZeroPattern {
        ZeroPattern {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

/// Vertex indices grouped by number of zero components: `strata[k]` is `A_k`.
pub fn strata(spec: &RingSpec, vertices: &[IdealVector]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); spec.factor_count()];
    for (idx, v) in vertices.iter().enumerate() {
        out[v.nzc()].push(idx);
    }
    out
}
