//! Fuzzy topologies as finite closure systems.
//!
//! A family of fuzzy subsets is a fuzzy topology when it contains the empty
//! and the whole fuzzy set and is closed under pairwise pointwise minimum
//! (intersection) and maximum (union). Closure under pairwise joins already
//! gives closure under arbitrary unions of subfamilies, because the family
//! is finite.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Code, GradeVector, LatticeContext};

/// A validated fuzzy topology: a strictly increasing list of codes that
/// contains bottom and top and is closed under pairwise meet and join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyFamily {
    ctx: LatticeContext,
    members: Vec<Code>,
}

impl TopologyFamily {
    /// Validates and normalizes `members` (sorted, deduplicated) into a family.
    pub fn new(ctx: LatticeContext, mut members: Vec<Code>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if !is_topology(&members, &ctx)? {
            return Err(Error::NotATopology(format!(
                "family {:?} violates the axioms on a lattice of size {}",
                members,
                ctx.size()
            )));
        }
        Ok(Self { ctx, members })
    }

    /// Internal constructor for families the enumerator has already verified.
    pub(crate) fn from_sorted_unchecked(ctx: LatticeContext, members: Vec<Code>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { ctx, members }
    }

    pub fn ctx(&self) -> &LatticeContext {
        &self.ctx
    }

    /// Member codes in strictly increasing order.
    pub fn members(&self) -> &[Code] {
        &self.members
    }

    /// Number of open sets, `k`.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, code: Code) -> bool {
        self.members.binary_search(&code).is_ok()
    }

    /// Members decoded to grade vectors, in member order.
    pub fn grade_vectors(&self) -> Vec<GradeVector> {
        self.members
            .iter()
            .map(|&c| self.ctx.decode(c).expect("member codes are valid"))
            .collect()
    }
}

impl fmt::Display for TopologyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.grade_vectors().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// Decides whether a family of codes is a fuzzy topology on `ctx`.
///
/// The input is treated as a set: duplicates are ignored.
pub fn is_topology(members: &[Code], ctx: &LatticeContext) -> Result<bool> {
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&max) = sorted.last() {
        if !ctx.contains(max) {
            return Err(Error::OutOfRange(format!(
                "code {max} out of range for lattice of size {}",
                ctx.size()
            )));
        }
    }
    if sorted.first() != Some(&ctx.bottom()) || sorted.last() != Some(&ctx.top()) {
        return Ok(false);
    }
    let inside = |c: Code| sorted.binary_search(&c).is_ok();
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            if !inside(ctx.meet_unchecked(a, b)) || !inside(ctx.join_unchecked(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest fuzzy topology containing `seed`.
///
/// Starts from `seed` plus bottom and top and repeatedly adds pairwise meets
/// and joins until a pass adds nothing.
pub fn closure(seed: &[Code], ctx: &LatticeContext) -> Result<TopologyFamily> {
    let size = usize::try_from(ctx.size()).map_err(|_| {
        Error::BudgetExceeded(format!("lattice of size {} too large to close over", ctx.size()))
    })?;
    let mut present = vec![false; size];
    let mut members: Vec<Code> = Vec::new();
    let add = |c: Code, members: &mut Vec<Code>, present: &mut Vec<bool>| {
        if !present[c as usize] {
            present[c as usize] = true;
            members.push(c);
        }
    };
    add(ctx.bottom(), &mut members, &mut present);
    add(ctx.top(), &mut members, &mut present);
    for &c in seed {
        if !ctx.contains(c) {
            return Err(Error::OutOfRange(format!(
                "code {c} out of range for lattice of size {}",
                ctx.size()
            )));
        }
        add(c, &mut members, &mut present);
    }
    // Worklist fixpoint: when an element is popped, pair it against every
    // member known so far. Each unordered pair is seen when its later
    // element is processed, so no product is missed.
    let mut queue: Vec<Code> = members.clone();
    while let Some(x) = queue.pop() {
        for idx in 0..members.len() {
            let y = members[idx];
            for prod in [ctx.meet_unchecked(x, y), ctx.join_unchecked(x, y)] {
                if !present[prod as usize] {
                    present[prod as usize] = true;
                    members.push(prod);
                    queue.push(prod);
                }
            }
        }
    }
    members.sort_unstable();
    Ok(TopologyFamily::from_sorted_unchecked(*ctx, members))
}
