//! Exhaustive enumeration of fuzzy topologies with a fixed open-set count.
//!
//! Two routes are provided on purpose:
//!
//! * [`enumerate_topologies`] / [`enumerate_topologies_into`] run a
//!   depth-first search that picks proper members in increasing code order
//!   and prunes a branch as soon as a required meet or join can no longer
//!   be added, or the partial closure outgrows `k`.
//! * [`naive_count`] tests every `(k-2)`-subset of the proper codes with the
//!   topology axioms. It is deliberately simple and serves as the oracle
//!   the fast search is checked against.
//!
//! Counting partitions the search by the first proper member chosen and
//! sums per-partition counts, so parallel runs return exactly the
//! single-worker result. Emission is sequential and lexicographic on the
//! sorted member lists.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::closed_form::binomial;
use crate::error::{Error, Result};
use crate::lattice::{Code, LatticeContext};
use crate::topology::TopologyFamily;

/// Caps on how much brute force a single query may spend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    /// Upper bound on candidate subsets, compared against `C(m^n - 2, k - 2)`.
    pub max_candidates: u64,
    /// Upper bound on the lattice size `m^n` for enumeration.
    pub max_lattice_size: u64,
}

impl Default for EnumBudget {
    fn default() -> Self {
        Self {
            max_candidates: 100_000_000,
            max_lattice_size: 4096,
        }
    }
}

impl EnumBudget {
    pub fn new(max_candidates: u64, max_lattice_size: u64) -> Result<Self> {
        if max_candidates == 0 || max_lattice_size == 0 {
            return Err(Error::InvalidArgs(
                "budget caps must be positive".to_string(),
            ));
        }
        Ok(Self {
            max_candidates,
            max_lattice_size,
        })
    }
}

/// Validates `k` and the budget for one enumeration query.
fn check_query(ctx: &LatticeContext, k: u64, budget: &EnumBudget) -> Result<()> {
    let size = ctx.size();
    if k < 2 || k > size {
        return Err(Error::InvalidK { k, max: size });
    }
    if size > budget.max_lattice_size {
        return Err(Error::BudgetExceeded(format!(
            "lattice size {size} exceeds the cap of {}",
            budget.max_lattice_size
        )));
    }
    let work = binomial(size - 2, k - 2);
    if work > BigUint::from(budget.max_candidates) {
        return Err(Error::BudgetExceeded(format!(
            "C({}, {}) = {work} candidate subsets exceed the cap of {}",
            size - 2,
            k - 2,
            budget.max_candidates
        )));
    }
    Ok(())
}

/// Meet/join evaluation for one enumeration run.
///
/// Small lattices get dense lookup tables; larger ones (up to the budget
/// cap) fall back to digit arithmetic.
struct Ops {
    ctx: LatticeContext,
    tables: Option<(Vec<u16>, Vec<u16>)>,
}

const TABLE_LIMIT: u64 = 1024;

impl Ops {
    fn new(ctx: &LatticeContext) -> Self {
        let size = ctx.size();
        let tables = if size <= TABLE_LIMIT {
            let n = size as usize;
            let mut meet = vec![0u16; n * n];
            let mut join = vec![0u16; n * n];
            for a in 0..size {
                for b in a..size {
                    let mt = ctx.meet_unchecked(a, b) as u16;
                    let jn = ctx.join_unchecked(a, b) as u16;
                    meet[(a * size + b) as usize] = mt;
                    meet[(b * size + a) as usize] = mt;
                    join[(a * size + b) as usize] = jn;
                    join[(b * size + a) as usize] = jn;
                }
            }
            Some((meet, join))
        } else {
            None
        };
        Self { ctx: *ctx, tables }
    }

    #[inline]
    fn meet(&self, a: Code, b: Code) -> Code {
        match &self.tables {
            Some((meet, _)) => meet[(a * self.ctx.size() + b) as usize] as Code,
            None => self.ctx.meet_unchecked(a, b),
        }
    }

    #[inline]
    fn join(&self, a: Code, b: Code) -> Code {
        match &self.tables {
            Some((_, join)) => join[(a * self.ctx.size() + b) as usize] as Code,
            None => self.ctx.join_unchecked(a, b),
        }
    }
}

/// Optional callback receiving each complete family as a sorted code list.
type EmitSink<'s> = Option<&'s mut dyn FnMut(&[Code])>;

/// Depth-first search state for one (sub)tree of the enumeration.
///
/// `chosen` holds the proper members picked so far, in increasing order.
/// `pending` holds codes that closure already forces into the family but
/// that have not been picked yet; they are all larger than the last chosen
/// code, otherwise the branch would have been pruned.
struct Searcher<'a> {
    ops: &'a Ops,
    k_proper: usize,
    top: Code,
    chosen: Vec<Code>,
    member: Vec<bool>,
    pending: Vec<Code>,
    count: u64,
}

impl<'a> Searcher<'a> {
    fn new(ops: &'a Ops, k_proper: usize) -> Self {
        let size = ops.ctx.size() as usize;
        Self {
            ops,
            k_proper,
            top: ops.ctx.top(),
            chosen: Vec::with_capacity(k_proper),
            member: vec![false; size],
            pending: Vec::new(),
            count: 0,
        }
    }

    fn seed(&mut self, first: Code) {
        debug_assert!(self.chosen.is_empty());
        self.chosen.push(first);
        self.member[first as usize] = true;
    }

    fn dfs(&mut self, emit: &mut EmitSink) {
        if self.chosen.len() == self.k_proper {
            if self.pending.is_empty() {
                self.count += 1;
                if let Some(sink) = emit {
                    let mut family = Vec::with_capacity(self.k_proper + 2);
                    family.push(0);
                    family.extend_from_slice(&self.chosen);
                    family.push(self.top);
                    sink(&family);
                }
            }
            return;
        }
        let remaining = (self.k_proper - self.chosen.len()) as u64;
        if self.pending.len() as u64 > remaining {
            return;
        }
        let low = self.chosen.last().map_or(1, |&c| c + 1);
        // Leave room for the members still to come: codes up to size-2 are
        // proper, and anything past the smallest pending code would orphan it.
        let mut high = self.top - remaining;
        if let Some(&p) = self.pending.first() {
            high = high.min(p);
        }
        for c in low..=high {
            self.try_candidate(c, emit);
        }
    }

    fn try_candidate(&mut self, c: Code, emit: &mut EmitSink) {
        // Collect closure obligations created by adding c, without touching
        // state yet. A product below c can never be added later (members are
        // picked in increasing order), so it kills the candidate.
        let mut fresh: Vec<Code> = Vec::new();
        for &s in &self.chosen {
            for prod in [self.ops.meet(c, s), self.ops.join(c, s)] {
                if prod == 0 || prod == self.top || prod == c || self.member[prod as usize] {
                    continue;
                }
                if prod < c {
                    return;
                }
                if self.pending.binary_search(&prod).is_err() && !fresh.contains(&prod) {
                    fresh.push(prod);
                }
            }
        }
        let consumes = self.pending.first() == Some(&c);
        let pending_after = self.pending.len() - usize::from(consumes) + fresh.len();
        if self.chosen.len() + 1 + pending_after > self.k_proper {
            return;
        }

        if consumes {
            self.pending.remove(0);
        }
        for &p in &fresh {
            let at = self.pending.binary_search(&p).unwrap_err();
            self.pending.insert(at, p);
        }
        self.chosen.push(c);
        self.member[c as usize] = true;

        self.dfs(emit);

        self.member[c as usize] = false;
        self.chosen.pop();
        for &p in &fresh {
            let at = self.pending.binary_search(&p).unwrap();
            self.pending.remove(at);
        }
        if consumes {
            self.pending.insert(0, c);
        }
    }
}

/// Counts the fuzzy topologies on `ctx` with exactly `k` open sets.
///
/// The search fans out over the first proper member; partition counts are
/// summed, so the result does not depend on worker scheduling.
pub fn enumerate_topologies(ctx: &LatticeContext, k: u64, budget: &EnumBudget) -> Result<u64> {
    check_query(ctx, k, budget)?;
    let k_proper = (k - 2) as usize;
    if k_proper == 0 {
        return Ok(1);
    }
    let ops = Ops::new(ctx);
    let first_high = ctx.top() - k_proper as u64;
    let total = (1..=first_high)
        .into_par_iter()
        .map(|first| {
            let mut searcher = Searcher::new(&ops, k_proper);
            searcher.seed(first);
            searcher.dfs(&mut None);
            searcher.count
        })
        .sum();
    Ok(total)
}

/// Like [`enumerate_topologies`], but feeds every family to `sink` exactly
/// once, in lexicographic order of the sorted member lists.
pub fn enumerate_topologies_into(
    ctx: &LatticeContext,
    k: u64,
    budget: &EnumBudget,
    mut sink: impl FnMut(&TopologyFamily),
) -> Result<u64> {
    check_query(ctx, k, budget)?;
    let k_proper = (k - 2) as usize;
    let ops = Ops::new(ctx);
    let mut searcher = Searcher::new(&ops, k_proper);
    let mut forward = |members: &[Code]| {
        sink(&TopologyFamily::from_sorted_unchecked(*ctx, members.to_vec()));
    };
    let mut emit: EmitSink = Some(&mut forward);
    searcher.dfs(&mut emit);
    Ok(searcher.count)
}

/// Collects the full listing for small instances.
pub fn list_topologies(
    ctx: &LatticeContext,
    k: u64,
    budget: &EnumBudget,
) -> Result<Vec<TopologyFamily>> {
    let mut out = Vec::new();
    enumerate_topologies_into(ctx, k, budget, |fam| out.push(fam.clone()))?;
    Ok(out)
}

/// Complete census: topology count for every `k` from 2 to `m^n`.
///
/// The whole census is budgeted up front: the subsets of the proper codes
/// number `2^(m^n - 2)`, which must stay within `max_candidates`.
pub fn enumerate_all_sizes(
    ctx: &LatticeContext,
    budget: &EnumBudget,
) -> Result<BTreeMap<u64, u64>> {
    let size = ctx.size();
    if size > budget.max_lattice_size {
        return Err(Error::BudgetExceeded(format!(
            "lattice size {size} exceeds the cap of {}",
            budget.max_lattice_size
        )));
    }
    let total_work = BigUint::from(1u32) << (size - 2) as usize;
    if total_work > BigUint::from(budget.max_candidates) {
        return Err(Error::BudgetExceeded(format!(
            "census needs 2^{} candidate subsets, more than the cap of {}",
            size - 2,
            budget.max_candidates
        )));
    }
    let mut census = BTreeMap::new();
    for k in 2..=size {
        census.insert(k, enumerate_topologies(ctx, k, budget)?);
    }
    Ok(census)
}

/// Baseline oracle: tests every `(k-2)`-subset of the proper codes.
///
/// Kept intentionally naive and independent of the pruned search so the two
/// can be compared against each other.
pub fn naive_count(ctx: &LatticeContext, k: u64, budget: &EnumBudget) -> Result<u64> {
    check_query(ctx, k, budget)?;
    let size = ctx.size();
    let ops = Ops::new(ctx);
    let t = (k - 2) as usize;
    let pool: Vec<Code> = ctx.proper_codes().collect();
    if t > pool.len() {
        return Ok(0);
    }
    let closed = |subset: &[Code]| -> bool {
        for (i, &a) in subset.iter().enumerate() {
            for &b in &subset[i + 1..] {
                for prod in [ops.meet(a, b), ops.join(a, b)] {
                    if prod != 0 && prod != size - 1 && subset.binary_search(&prod).is_err() {
                        return false;
                    }
                }
            }
        }
        true
    };
    if t == 0 {
        return Ok(1);
    }
    // Odometer over index combinations in lexicographic order.
    let mut idx: Vec<usize> = (0..t).collect();
    let mut subset: Vec<Code> = idx.iter().map(|&i| pool[i]).collect();
    let mut count = 0u64;
    loop {
        if closed(&subset) {
            count += 1;
        }
        let mut pos = t;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + pool.len() - t {
                idx[pos] += 1;
                for j in pos + 1..t {
                    idx[j] = idx[j - 1] + 1;
                }
                for j in pos..t {
                    subset[j] = pool[idx[j]];
                }
                break;
            }
            if pos == 0 {
                return Ok(count);
            }
        }
    }
}
