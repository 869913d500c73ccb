//! Lower bounds on count-matrix entries that hold across a whole elliptic
//! class. They drive the "only if" half of the order reversal.

use super::bruhat::CountMatrix;
use super::{class_label, Family, GroupContext, SignedPermutation};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `min{k : α_1 + ⋯ + α_k ≥ m}`, or `None` when `m` exceeds the total.
pub fn cover_index(alpha: &Partition, m: u32) -> Option<usize> {
    (0..=alpha.len()).find(|&k| alpha.prefix_sum(k) >= m)
}

/// For `w` in the `BC(n)` class `α`, checks
/// `w[n-m, n-m+1] ≥ min{k : α_1+⋯+α_k ≥ m}` for every `0 ≤ m ≤ n`.
/// Returns the first failing `m`.
pub fn bc_inequality(ctx: &GroupContext, w: &SignedPermutation) -> Result<Option<u32>> {
    if ctx.family != Family::BC {
        return Err(Error::UnsupportedFamily(ctx.family.name().into()));
    }
    let label = class_label(ctx, w).ok_or_else(|| Error::NotInGroup {
        element: w.to_string(),
        context: format!("elliptic classes of {ctx}"),
    })?;
    let alpha = label.partition();
    let c = CountMatrix::new(w, true);
    let n = ctx.rank as i32;
    for m in 0..=n {
        let bound = cover_index(alpha, m as u32).unwrap_or(usize::MAX);
        if (c.get(n - m, n - m + 1) as usize) < bound {
            return Ok(Some(m as u32));
        }
    }
    Ok(None)
}

/// For a twisted element of `TwistedA(n)` (stored `P`, whose class is read
/// from `u = P·w₀`), checks
/// `u[⌈m/2⌉, n-⌊m/2⌋+1] + u[n-⌊m/2⌋, ⌈m/2⌉+1] ≤ n - min{k : α_1+⋯+α_k ≥ m}`
/// for `1 ≤ m ≤ n-1`. Returns the first failing `m`.
pub fn twisted_a_inequality(ctx: &GroupContext, w: &SignedPermutation) -> Result<Option<u32>> {
    if ctx.family != Family::TwistedA {
        return Err(Error::UnsupportedFamily(ctx.family.name().into()));
    }
    let label = class_label(ctx, w).ok_or_else(|| Error::NotInGroup {
        element: w.to_string(),
        context: format!("elliptic classes of {ctx}"),
    })?;
    let alpha = label.partition();
    let u = w.compose(&ctx.delta());
    let c = CountMatrix::new(&u, false);
    let n = ctx.rank as i32;
    for m in 1..n {
        let (up, down) = ((m + 1) / 2, m / 2);
        let lhs = c.get(up, n - down + 1) + c.get(n - down, up + 1);
        let k = cover_index(alpha, m as u32).unwrap_or(usize::MAX);
        if lhs as i64 > n as i64 - k as i64 {
            return Ok(Some(m as u32));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{enumerate_group, DEFAULT_GROUP_CAP};

    #[test]
    fn cover_index_examples() {
        let a: Partition = "[3,2,1]".parse().unwrap();
        assert_eq!(cover_index(&a, 0), Some(0));
        assert_eq!(cover_index(&a, 3), Some(1));
        assert_eq!(cover_index(&a, 4), Some(2));
        assert_eq!(cover_index(&a, 6), Some(3));
        assert_eq!(cover_index(&a, 7), None);
    }

    #[test]
    fn bc_small() {
        for n in 1..=4 {
            let ctx = GroupContext::bc(n).unwrap();
            for w in enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap() {
                if class_label(&ctx, &w).is_some() {
                    assert_eq!(bc_inequality(&ctx, &w).unwrap(), None, "{w}");
                }
            }
        }
    }

    #[test]
    fn twisted_a_small() {
        for n in 2..=5 {
            let ctx = GroupContext::twisted_a(n).unwrap();
            for w in enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap() {
                if class_label(&ctx, &w).is_some() {
                    assert_eq!(twisted_a_inequality(&ctx, &w).unwrap(), None, "{w}");
                }
            }
        }
    }

    #[test]
    fn rejects_other_families() {
        let d = GroupContext::d(3, crate::weyl::Component::Identity).unwrap();
        let w = SignedPermutation::negation(3);
        assert!(bc_inequality(&d, &w).is_err());
        let bc = GroupContext::bc(3).unwrap();
        assert!(bc_inequality(&bc, &SignedPermutation::identity(3)).is_err());
    }
}
