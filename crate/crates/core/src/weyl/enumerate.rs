use super::perm::MAX_RANK;
use super::roots::length_unchecked;
use super::{class_label, EllipticClassLabel, Family, GroupContext, SignedPermutation};
use crate::error::{Error, Result};

/// Default bound on the number of elements a brute-force search may visit.
pub const DEFAULT_GROUP_CAP: u128 = 1_000_000;

/// Number of elements in the context's group or coset.
pub fn group_order(ctx: &GroupContext) -> u128 {
    let n = ctx.rank as u32;
    let fact: u128 = (1..=n as u128).product();
    match ctx.family {
        Family::A | Family::TwistedA => fact,
        Family::BC | Family::O2n => fact << n,
        Family::D => fact << (n - 1),
    }
}

/// Every element of the context once, permutations in lexicographic order
/// and, within each, sign patterns in increasing binary order.
pub fn enumerate_group(ctx: &GroupContext, cap: u128) -> Result<Vec<SignedPermutation>> {
    let size = group_order(ctx);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let n = ctx.rank;
    let mut out = Vec::with_capacity(size as usize);
    let mut perm: Vec<i8> = (1..=n as i8).collect();
    let signs: u32 = if ctx.family.is_signed() { 1 << n } else { 1 };
    loop {
        for mask in 0..signs {
            let mut images = [0i8; MAX_RANK];
            for i in 0..n {
                images[i] = if mask >> i & 1 == 1 { -perm[i] } else { perm[i] };
            }
            let w = SignedPermutation::from_raw(n, images);
            if ctx.contains(&w) {
                out.push(w);
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    debug_assert_eq!(out.len() as u128, size);
    Ok(out)
}

fn next_permutation(v: &mut [i8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All elements whose class label is `label`.
pub fn enumerate_class(
    ctx: &GroupContext,
    label: &EllipticClassLabel,
    cap: u128,
) -> Result<Vec<SignedPermutation>> {
    check_label(ctx, label)?;
    Ok(enumerate_group(ctx, cap)?
        .into_iter()
        .filter(|w| class_label(ctx, w).as_ref() == Some(label))
        .collect())
}

/// The elements of minimal length in the class `label`.
pub fn min_length_elements(
    ctx: &GroupContext,
    label: &EllipticClassLabel,
    cap: u128,
) -> Result<Vec<SignedPermutation>> {
    let class = enumerate_class(ctx, label, cap)?;
    let min = class
        .iter()
        .map(|w| length_unchecked(ctx.family, w))
        .min()
        .unwrap_or(0);
    Ok(class
        .into_iter()
        .filter(|w| length_unchecked(ctx.family, w) == min)
        .collect())
}

fn check_label(ctx: &GroupContext, label: &EllipticClassLabel) -> Result<()> {
    let l = label.ctx();
    let same = l.family == ctx.family
        && l.rank == ctx.rank
        && (ctx.family == Family::O2n || l.component == ctx.component);
    if same {
        Ok(())
    } else {
        Err(Error::ContextMismatch(format!(
            "label {label} belongs to {l}, not {ctx}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::weyl::{length, Component};
    use std::collections::HashSet;

    #[test]
    fn orders() {
        let bc2 = GroupContext::bc(2).unwrap();
        assert_eq!(enumerate_group(&bc2, DEFAULT_GROUP_CAP).unwrap().len(), 8);
        let d3 = GroupContext::d(3, Component::Identity).unwrap();
        assert_eq!(enumerate_group(&d3, DEFAULT_GROUP_CAP).unwrap().len(), 24);
        let bc6 = GroupContext::bc(6).unwrap();
        let all = enumerate_group(&bc6, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(all.len(), 46080);
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 46080);
        assert_eq!(group_order(&GroupContext::a(5).unwrap()), 120);
        assert!(matches!(
            enumerate_group(&GroupContext::bc(9).unwrap(), DEFAULT_GROUP_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn deterministic_order() {
        let ctx = GroupContext::bc(3).unwrap();
        assert_eq!(
            enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap(),
            enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap()
        );
    }

    #[test]
    fn class_examples() {
        let ctx = GroupContext::bc(2).unwrap();
        let l11 = EllipticClassLabel::new(ctx, "[1,1]".parse().unwrap()).unwrap();
        let w0 = SignedPermutation::negation(2);
        assert_eq!(enumerate_class(&ctx, &l11, DEFAULT_GROUP_CAP).unwrap(), vec![w0]);
        assert_eq!(min_length_elements(&ctx, &l11, DEFAULT_GROUP_CAP).unwrap(), vec![w0]);
        let l2 = EllipticClassLabel::new(ctx, Partition::new(vec![2]).unwrap()).unwrap();
        // [2,-1] and [-2,1]; the centralizer has order 4
        assert_eq!(enumerate_class(&ctx, &l2, DEFAULT_GROUP_CAP).unwrap().len(), 2);
        let mins = min_length_elements(&ctx, &l2, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(mins.len(), 2);
        assert!(mins.iter().all(|w| length(&ctx, w).unwrap() == 2));
        let other = GroupContext::bc(3).unwrap();
        assert!(enumerate_class(&other, &l2, DEFAULT_GROUP_CAP).is_err());
    }

    #[test]
    fn class_sizes_sum_to_elliptic_count() {
        // classes partition the elliptic elements
        let ctx = GroupContext::d(4, Component::Twisted).unwrap();
        let elements = enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap();
        let elliptic = elements.iter().filter(|w| class_label(&ctx, w).is_some()).count();
        let total: usize = EllipticClassLabel::all(&ctx)
            .unwrap()
            .iter()
            .map(|l| enumerate_class(&ctx, l, DEFAULT_GROUP_CAP).unwrap().len())
            .sum();
        assert_eq!(total, elliptic);
    }
}
