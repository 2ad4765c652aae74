//! Fuzzy subsets of a finite point set, with grades in a finite chain.
//!
//! A fuzzy subset of an `n`-point set with grades in an `m`-element chain is
//! a length-`n` vector of grade ranks in `{0, ..., m-1}`. Rank `0` is the
//! chain minimum and rank `m-1` the maximum; only the order of the grades
//! matters to the lattice operations, so chains like `{0, 0.5, 1}` are
//! represented by their ranks `{0, 1, 2}`.
//!
//! Every fuzzy subset is canonically encoded as a mixed-radix integer
//! (digit `i` has weight `m^i`), giving the dense code range `[0, m^n)`.
//! Code `0` is the empty fuzzy set and code `m^n - 1` the whole set; the
//! pointwise minimum and maximum of two fuzzy subsets are the lattice meet
//! and join.

use std::fmt;

use crate::error::{Error, Result};

/// Canonical integer code of a fuzzy subset, in `[0, m^n)`.
pub type Code = u64;

/// The ambient lattice `M^X`: `n` points, `m` grades, `m^n` fuzzy subsets.
///
/// Construction fails unless `n >= 1`, `m >= 2` and `m^n` fits in 64 bits;
/// the size is computed with checked arithmetic so it is always exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeContext {
    n: usize,
    m: u64,
    size: u64,
}

impl LatticeContext {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgs(format!("n must be at least 1, got {n}")));
        }
        if m < 2 {
            return Err(Error::InvalidArgs(format!("m must be at least 2, got {m}")));
        }
        // m >= 2 means n > 63 always overflows u64.
        if n > 63 {
            return Err(Error::ContextTooLarge { n, m });
        }
        let mut size: u64 = 1;
        for _ in 0..n {
            size = size
                .checked_mul(m)
                .ok_or(Error::ContextTooLarge { n, m })?;
        }
        Ok(Self { n: n as usize, m, size })
    }

    /// Number of points in the ground set.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of grades in the chain.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of fuzzy subsets, `m^n`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Code of the empty fuzzy set (grade 0 everywhere).
    pub fn bottom(&self) -> Code {
        0
    }

    /// Code of the whole set (grade `m-1` everywhere).
    pub fn top(&self) -> Code {
        self.size - 1
    }

    pub fn contains(&self, code: Code) -> bool {
        code < self.size
    }

    /// All codes in ascending order.
    pub fn codes(&self) -> impl Iterator<Item = Code> {
        0..self.size
    }

    /// All codes strictly between bottom and top, in ascending order.
    pub fn proper_codes(&self) -> impl Iterator<Item = Code> {
        1..self.size.saturating_sub(1)
    }

    fn ensure(&self, code: Code) -> Result<()> {
        if self.contains(code) {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!(
                "code {code} out of range for lattice of size {}",
                self.size
            )))
        }
    }

    /// Encodes a grade vector as its mixed-radix code, `sum_i g[i] * m^i`.
    pub fn encode(&self, grades: &[u64]) -> Result<Code> {
        if grades.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "grade vector has length {}, expected {}",
                grades.len(),
                self.n
            )));
        }
        // Horner evaluation from the most significant digit down.
        let mut code = 0u64;
        for (i, &g) in grades.iter().enumerate().rev() {
            if g >= self.m {
                return Err(Error::OutOfRange(format!(
                    "grade {g} at position {i} is not below m = {}",
                    self.m
                )));
            }
            code = code * self.m + g;
        }
        Ok(code)
    }

    /// Decodes a code back to its grade vector.
    pub fn decode(&self, code: Code) -> Result<GradeVector> {
        self.ensure(code)?;
        let mut grades = Vec::with_capacity(self.n);
        let mut rest = code;
        for _ in 0..self.n {
            grades.push(rest % self.m);
            rest /= self.m;
        }
        Ok(GradeVector(grades))
    }

    /// Pointwise minimum (fuzzy intersection).
    pub fn meet(&self, a: Code, b: Code) -> Result<Code> {
        self.ensure(a)?;
        self.ensure(b)?;
        Ok(self.meet_unchecked(a, b))
    }

    /// Pointwise maximum (fuzzy union).
    pub fn join(&self, a: Code, b: Code) -> Result<Code> {
        self.ensure(a)?;
        self.ensure(b)?;
        Ok(self.join_unchecked(a, b))
    }

    /// Pointwise order: true iff every grade of `a` is at most the grade of `b`.
    pub fn leq(&self, a: Code, b: Code) -> Result<bool> {
        self.ensure(a)?;
        self.ensure(b)?;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.n {
            if a % self.m > b % self.m {
                return Ok(false);
            }
            a /= self.m;
            b /= self.m;
        }
        Ok(true)
    }

    /// Gradewise complement `t -> (m-1) - t`.
    ///
    /// This map is an anti-automorphism of the lattice: it is an involution
    /// and swaps meet with join.
    pub fn complement(&self, a: Code) -> Result<Code> {
        self.ensure(a)?;
        let mut rest = a;
        let mut out = 0u64;
        let mut weight = 1u64;
        for i in 0..self.n {
            out += (self.m - 1 - rest % self.m) * weight;
            rest /= self.m;
            if i + 1 < self.n {
                weight *= self.m;
            }
        }
        Ok(out)
    }

    pub(crate) fn meet_unchecked(&self, a: Code, b: Code) -> Code {
        self.pointwise(a, b, true)
    }

    pub(crate) fn join_unchecked(&self, a: Code, b: Code) -> Code {
        self.pointwise(a, b, false)
    }

    #[inline]
    fn pointwise(&self, mut a: Code, mut b: Code, take_min: bool) -> Code {
        let mut out = 0u64;
        let mut weight = 1u64;
        for i in 0..self.n {
            let da = a % self.m;
            let db = b % self.m;
            let d = if take_min { da.min(db) } else { da.max(db) };
            out += d * weight;
            a /= self.m;
            b /= self.m;
            if i + 1 < self.n {
                weight *= self.m;
            }
        }
        out
    }
}

/// A fuzzy subset as an explicit vector of grade ranks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeVector(Vec<u64>);

impl GradeVector {
    pub fn new(grades: Vec<u64>) -> Self {
        GradeVector(grades)
    }

    pub fn grades(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u64>> for GradeVector {
    fn from(grades: Vec<u64>) -> Self {
        GradeVector(grades)
    }
}

impl fmt::Display for GradeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u64, m: u64) -> LatticeContext {
        LatticeContext::new(n, m).unwrap()
    }

    #[test]
    fn construction_validates_inputs() {
        assert!(matches!(
            LatticeContext::new(0, 3),
            Err(Error::InvalidArgs(_))
        ));
        assert!(matches!(
            LatticeContext::new(2, 1),
            Err(Error::InvalidArgs(_))
        ));
        assert!(matches!(
            LatticeContext::new(64, 2),
            Err(Error::ContextTooLarge { .. })
        ));
        assert!(matches!(
            LatticeContext::new(40, 10),
            Err(Error::ContextTooLarge { .. })
        ));
        let c = ctx(2, 3);
        assert_eq!(c.size(), 9);
        assert_eq!(c.top(), 8);
        // 2^63 fits, 2^64 does not.
        assert_eq!(ctx(63, 2).size(), 1u64 << 63);
    }

    #[test]
    fn encode_bottom_and_top() {
        let c = ctx(2, 3);
        assert_eq!(c.encode(&[0, 0]).unwrap(), 0);
        assert_eq!(c.encode(&[2, 2]).unwrap(), 8);
    }

    #[test]
    fn encode_positional_weights() {
        // 1 * 3^0 + 2 * 3^1 = 7
        let c = ctx(2, 3);
        assert_eq!(c.encode(&[1, 2]).unwrap(), 7);
    }

    #[test]
    fn encode_rejects_bad_vectors() {
        let c = ctx(2, 3);
        assert!(matches!(c.encode(&[0, 3]), Err(Error::OutOfRange(_))));
        assert!(matches!(c.encode(&[0]), Err(Error::OutOfRange(_))));
        assert!(matches!(c.encode(&[0, 0, 0]), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn decode_is_inverse_of_encode() {
        let c = ctx(3, 4);
        for code in c.codes() {
            let g = c.decode(code).unwrap();
            assert_eq!(c.encode(g.grades()).unwrap(), code);
        }
        assert!(matches!(c.decode(64), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn meet_bottom_absorbs_and_idempotent() {
        let c = ctx(2, 3);
        for x in c.codes() {
            assert_eq!(c.meet(x, 0).unwrap(), 0);
            assert_eq!(c.meet(x, x).unwrap(), x);
        }
    }

    #[test]
    fn meet_is_pointwise_min() {
        let c = ctx(2, 3);
        let a = c.encode(&[1, 2]).unwrap();
        let b = c.encode(&[2, 0]).unwrap();
        assert_eq!(c.meet(a, b).unwrap(), c.encode(&[1, 0]).unwrap());
    }

    #[test]
    fn join_top_absorbs_bottom_is_identity() {
        let c = ctx(2, 3);
        for x in c.codes() {
            assert_eq!(c.join(x, c.top()).unwrap(), c.top());
            assert_eq!(c.join(0, x).unwrap(), x);
        }
    }

    #[test]
    fn join_is_pointwise_max() {
        let c = ctx(2, 3);
        let a = c.encode(&[0, 1]).unwrap();
        let b = c.encode(&[2, 0]).unwrap();
        assert_eq!(c.join(a, b).unwrap(), c.encode(&[2, 1]).unwrap());
    }

    #[test]
    fn leq_examples() {
        let c = ctx(2, 3);
        for x in c.codes() {
            assert!(c.leq(0, x).unwrap());
        }
        let a = c.encode(&[1, 2]).unwrap();
        let b = c.encode(&[2, 2]).unwrap();
        assert!(c.leq(a, b).unwrap());
        let p = c.encode(&[1, 0]).unwrap();
        let q = c.encode(&[0, 2]).unwrap();
        assert!(!c.leq(p, q).unwrap());
        assert!(!c.leq(q, p).unwrap());
    }

    #[test]
    fn leq_agrees_with_meet_and_join() {
        let c = ctx(2, 4);
        for a in c.codes() {
            for b in c.codes() {
                let le = c.leq(a, b).unwrap();
                assert_eq!(le, c.meet(a, b).unwrap() == a);
                assert_eq!(le, c.join(a, b).unwrap() == b);
            }
        }
    }

    #[test]
    fn complement_is_an_involution_swapping_meet_and_join() {
        let c = ctx(2, 3);
        for a in c.codes() {
            assert_eq!(c.complement(c.complement(a).unwrap()).unwrap(), a);
            for b in c.codes() {
                let lhs = c.complement(c.meet(a, b).unwrap()).unwrap();
                let rhs = c
                    .join(c.complement(a).unwrap(), c.complement(b).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(c.complement(0).unwrap(), c.top());
    }

    #[test]
    fn grade_vector_display() {
        let g = GradeVector::new(vec![0, 1, 2]);
        assert_eq!(g.to_string(), "[0,1,2]");
    }
}
