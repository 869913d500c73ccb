use std::fmt;

use serde::Serialize;

use super::{Component, Family, GroupContext, SignedPermutation};
use crate::error::{Error, Result};
use crate::partitions::{Partition, PartitionFamily};

/// Sizes of the negative cycles and of the positive cycle pairs of `w`
/// acting on `{±1, …, ±n}`.
///
/// An orbit containing both `r` and `-r` is a negative cycle of size
/// `|orbit| / 2`; otherwise the orbit and its negative form a positive pair.
pub fn signed_cycle_type(w: &SignedPermutation) -> (Partition, Partition) {
    let n = w.rank();
    let mut seen = vec![false; n + 1];
    let mut negative = Vec::new();
    let mut positive = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut flipped = false;
        let mut r = start as i32;
        loop {
            seen[r.unsigned_abs() as usize] = true;
            len += 1;
            r = w.apply(r);
            if r == start as i32 {
                break;
            }
            if r == -(start as i32) {
                flipped = true;
                break;
            }
        }
        if flipped {
            negative.push(len);
        } else {
            positive.push(len);
        }
    }
    (
        Partition::from_multiset(negative),
        Partition::from_multiset(positive),
    )
}

/// Cycle type of `w` acting on `1..=n`, ignoring signs.
pub fn cycle_type(w: &SignedPermutation) -> Partition {
    let n = w.rank();
    let mut seen = vec![false; n + 1];
    let mut sizes = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut r = start;
        while !seen[r] {
            seen[r] = true;
            len += 1;
            r = w.apply(r as i32).unsigned_abs() as usize;
        }
        sizes.push(len);
    }
    Partition::from_multiset(sizes)
}

/// An elliptic conjugacy class, named by its partition.
///
/// The partition lies in `P(n)` for `BC`, in `P(n)_0` (`Identity`) or
/// `P(n)_1` (`Twisted`) for `D`/`O2n`, in `P^odd(n)` for `TwistedA`, and is
/// `[n]` (the Coxeter class) for `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EllipticClassLabel {
    ctx: GroupContext,
    partition: Partition,
}

impl EllipticClassLabel {
    /// For `D` and `O2n` the component is taken from the parity of the
    /// number of parts; a context fixed to the other component is an error.
    pub fn new(ctx: GroupContext, partition: Partition) -> Result<Self> {
        let n = ctx.rank;
        if partition.total() as usize != n {
            return Err(Error::SumMismatch { partition, rank: n });
        }
        let mut ctx = ctx;
        let ok = match ctx.family {
            Family::A => partition.len() == 1,
            Family::BC => true,
            Family::TwistedA => partition.all_odd(),
            Family::D | Family::O2n => {
                let comp = parity_component(&partition);
                if ctx.family == Family::D && comp != ctx.component {
                    false
                } else {
                    ctx.component = comp;
                    true
                }
            }
        };
        if !ok {
            return Err(Error::InvalidForFamily {
                partition,
                family: ctx.to_string(),
            });
        }
        Ok(EllipticClassLabel { ctx, partition })
    }

    pub fn ctx(&self) -> &GroupContext {
        &self.ctx
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn component(&self) -> Component {
        self.ctx.component
    }

    /// All labels of a context in reverse-lexicographic order. For `O2n`
    /// both components are listed.
    pub fn all(ctx: &GroupContext) -> Result<Vec<Self>> {
        let n = ctx.rank as u32;
        let fam = match (ctx.family, ctx.component) {
            (Family::A, _) => return Ok(vec![Self::new(*ctx, Partition::new(vec![n])?)?]),
            (Family::BC, _) | (Family::O2n, _) => PartitionFamily::All(n),
            (Family::TwistedA, _) => PartitionFamily::OddParts(n),
            (Family::D, Component::Identity) => PartitionFamily::EvenLength(n),
            (Family::D, Component::Twisted) => PartitionFamily::OddLength(n),
        };
        fam.members()?
            .into_iter()
            .map(|p| Self::new(*ctx, p))
            .collect()
    }
}

/// `Identity` when the partition has an even number of parts.
pub(crate) fn parity_component(p: &Partition) -> Component {
    if p.len().is_multiple_of(2) {
        Component::Identity
    } else {
        Component::Twisted
    }
}

impl fmt::Display for EllipticClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if self.ctx.component == Component::Twisted {
            f.write_str("*d")?;
        }
        Ok(())
    }
}

/// The elliptic class of `w`, or `None` if `w` is not elliptic or not in
/// the context.
///
/// * `BC`: only negative cycles; the label is their sizes.
/// * `D`, `O2n`: as for `BC`, with the component given by the parity.
/// * `TwistedA`: for the stored `w` (standing for `wδ`), the cycle type of
///   `w·w₀` must have only odd parts.
/// * `A`: the cycle type must be `[n]`.
pub fn class_label(ctx: &GroupContext, w: &SignedPermutation) -> Option<EllipticClassLabel> {
    if !ctx.contains(w) {
        return None;
    }
    let partition = match ctx.family {
        Family::A => {
            let c = cycle_type(w);
            if c.len() != 1 {
                return None;
            }
            c
        }
        Family::TwistedA => {
            let c = cycle_type(&w.compose(&ctx.delta()));
            if !c.all_odd() {
                return None;
            }
            c
        }
        Family::BC | Family::D | Family::O2n => {
            let (neg, pos) = signed_cycle_type(w);
            if !pos.is_empty() {
                return None;
            }
            neg
        }
    };
    EllipticClassLabel::new(*ctx, partition).ok()
}
