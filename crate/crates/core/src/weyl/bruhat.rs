use serde::Serialize;

use super::roots::{length_unchecked, reflection_unchecked, right_descent, simple_root};
use super::{Family, GroupContext, SignedPermutation};
use crate::error::{Error, Result};

/// The table `w[i,j] = |{k ≤ i : w(k) ≥ j}|`.
///
/// For signed families `k` runs over `-n..=-1, 1..=n`; for `A` over `1..=n`.
/// [`get`](Self::get) accepts any integer indices, extending the table by
/// the same counting rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountMatrix {
    n: usize,
    signed: bool,
    /// Row-major over the index list from [`indices`](Self::indices).
    data: Vec<u32>,
}

impl CountMatrix {
    pub fn new(w: &SignedPermutation, signed: bool) -> Self {
        let n = w.rank();
        let idx = index_list(n, signed);
        let mut data = Vec::with_capacity(idx.len() * idx.len());
        for &i in &idx {
            for &j in &idx {
                data.push(direct_count(w, signed, i, j));
            }
        }
        CountMatrix { n, signed, data }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    /// Row and column indices of the stored table.
    pub fn indices(&self) -> Vec<i32> {
        index_list(self.n, self.signed)
    }

    pub fn get(&self, i: i32, j: i32) -> u32 {
        let n = self.n as i32;
        let lo = if self.signed { -n } else { 1 };
        if i < lo {
            return 0;
        }
        let i = if i > n {
            n
        } else if i == 0 {
            -1
        } else {
            i
        };
        if j > n {
            return 0;
        }
        let j = if j < lo {
            lo
        } else if j == 0 {
            1
        } else {
            j
        };
        let size = if self.signed { 2 * self.n } else { self.n };
        self.data[self.pos(i) * size + self.pos(j)]
    }

    fn pos(&self, i: i32) -> usize {
        let n = self.n as i32;
        if !self.signed {
            (i - 1) as usize
        } else if i < 0 {
            (i + n) as usize
        } else {
            (i + n - 1) as usize
        }
    }
}

fn index_list(n: usize, signed: bool) -> Vec<i32> {
    let n = n as i32;
    if signed {
        (-n..=-1).chain(1..=n).collect()
    } else {
        (1..=n).collect()
    }
}

fn direct_count(w: &SignedPermutation, signed: bool, i: i32, j: i32) -> u32 {
    let n = w.rank() as i32;
    let lo = if signed { -n } else { 1 };
    (lo..=i.min(n))
        .filter(|&k| k != 0 && w.apply(k) >= j)
        .count() as u32
}

/// Count matrix of `w`; signed for `BC`, `D` and `O2n`.
pub fn count_matrix(ctx: &GroupContext, w: &SignedPermutation) -> CountMatrix {
    CountMatrix::new(w, ctx.family.is_signed())
}

fn counts_supported(ctx: &GroupContext) -> Result<()> {
    match ctx.family {
        Family::A | Family::BC | Family::TwistedA => Ok(()),
        Family::D | Family::O2n => Err(Error::UnsupportedFamily(format!(
            "{} (count criterion is only an implication there)",
            ctx.family
        ))),
    }
}

/// First index pair `(i, j)` with `x[i,j] > y[i,j]`, if any.
pub fn count_witness(
    ctx: &GroupContext,
    x: &SignedPermutation,
    y: &SignedPermutation,
) -> Result<Option<(i32, i32)>> {
    ctx.check(x)?;
    ctx.check(y)?;
    let cx = count_matrix(ctx, x);
    let cy = count_matrix(ctx, y);
    for &i in &cx.indices() {
        for &j in &cx.indices() {
            if cx.get(i, j) > cy.get(i, j) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Bruhat order by entrywise comparison of count matrices.
///
/// Exact for `A`, `BC` and `TwistedA` (where the stored plain permutations
/// are compared). Rejects `D` and `O2n`.
pub fn bruhat_leq_counts(
    ctx: &GroupContext,
    x: &SignedPermutation,
    y: &SignedPermutation,
) -> Result<bool> {
    counts_supported(ctx)?;
    Ok(count_witness(ctx, x, y)?.is_none())
}

/// Bruhat order by descent recursion: strip a right descent `s` of `y`, and
/// strip it from `x` too when it is a descent of `x`.
///
/// On the twisted coset of `D`, `uδ ≤ vδ` means `u ≤ v`. Since
/// `uδ·s = u·(δsδ)·δ`, running the recursion on the stored elements runs it
/// on `u, v` with the generators relabelled, so no special case is needed.
pub fn bruhat_leq_generic(
    ctx: &GroupContext,
    x: &SignedPermutation,
    y: &SignedPermutation,
) -> Result<bool> {
    ctx.check(x)?;
    ctx.check(y)?;
    if ctx.component_of(x) != ctx.component_of(y) {
        return Err(Error::ComponentMismatch);
    }
    Ok(leq_generic_unchecked(ctx, *x, *y))
}

pub(crate) fn leq_generic_unchecked(
    ctx: &GroupContext,
    mut x: SignedPermutation,
    mut y: SignedPermutation,
) -> bool {
    let mut lx = length_unchecked(ctx.family, &x);
    let mut ly = length_unchecked(ctx.family, &y);
    loop {
        if lx >= ly {
            return lx == ly && x == y;
        }
        let i = right_descent(ctx, &y).expect("positive length has a descent");
        let s = reflection_unchecked(ctx, i);
        y = y.compose(&s);
        ly -= 1;
        if simple_root(ctx, i).sent_negative(&x) {
            x = x.compose(&s);
            lx -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{
        enumerate_group, length, simple_reflection, simple_reflection_count, Component,
        DEFAULT_GROUP_CAP,
    };
    use std::collections::HashSet;

    /// Bruhat order from the subword property: the set of elements below
    /// `y` is the closure of `{1}` under "multiply by `s` when the length
    /// goes up" along a reduced word of `y`.
    fn below_by_subwords(ctx: &GroupContext, y: &SignedPermutation) -> HashSet<SignedPermutation> {
        let mut word = Vec::new();
        let mut v = *y;
        while let Some(i) = right_descent(ctx, &v) {
            word.push(i);
            v = v.compose(&reflection_unchecked(ctx, i));
        }
        word.reverse();
        let mut set: HashSet<SignedPermutation> = [v].into_iter().collect();
        for i in word {
            let s = simple_reflection(ctx, i).unwrap();
            let add: Vec<_> = set.iter().map(|w| w.compose(&s)).collect();
            set.extend(add);
        }
        set
    }

    #[test]
    fn count_matrix_examples() {
        let a3 = GroupContext::a(3).unwrap();
        let id = count_matrix(&a3, &SignedPermutation::identity(3));
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(id.get(i, j), (i - j + 1).max(0) as u32);
            }
        }
        let bc2 = GroupContext::bc(2).unwrap();
        let w0 = count_matrix(&bc2, &SignedPermutation::negation(2));
        assert_eq!(w0.get(1, 2), 1);
        assert_eq!(w0.get(0, 1), w0.get(-1, 1));
        assert_eq!(w0.get(2, 3), 0);
        assert_eq!(w0.get(2, -5), 4);
        assert_eq!(w0.get(-3, 1), 0);
    }

    #[test]
    fn count_matrix_monotone_and_direct() {
        let ctx = GroupContext::bc(3).unwrap();
        for w in enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap() {
            let m = count_matrix(&ctx, &w);
            for i in -4..=4 {
                for j in -4..=4 {
                    assert!(m.get(i, j) <= m.get(i + 1, j));
                    assert!(m.get(i, j) >= m.get(i, j + 1));
                    if i != 0 && j != 0 && i.abs() <= 3 && j.abs() <= 3 {
                        assert_eq!(m.get(i, j), direct_count(&w, true, i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn examples() {
        let bc2 = GroupContext::bc(2).unwrap();
        let s = |i| simple_reflection(&bc2, i).unwrap();
        let w0 = SignedPermutation::negation(2);
        assert!(bruhat_leq_counts(&bc2, &s(1).multiply(&s(2)).unwrap(), &w0).unwrap());
        let x: SignedPermutation = "[2,-1]".parse().unwrap();
        assert!(!bruhat_leq_counts(&bc2, &w0, &x).unwrap());
        assert!(count_witness(&bc2, &w0, &x).unwrap().is_some());
        let a3 = GroupContext::a(3).unwrap();
        let p = |s: &str| s.parse::<SignedPermutation>().unwrap();
        assert!(bruhat_leq_counts(&a3, &p("[2,1,3]"), &p("[3,1,2]")).unwrap());
        assert!(bruhat_leq_generic(&a3, &p("[2,1,3]"), &p("[3,1,2]")).unwrap());
        let d3 = GroupContext::d(3, Component::Identity).unwrap();
        assert!(bruhat_leq_counts(&d3, &p("[1,2,3]"), &p("[1,2,3]")).is_err());
        let o = GroupContext::o2n(3).unwrap();
        assert_eq!(
            bruhat_leq_generic(&o, &p("[1,2,3]"), &p("[-1,2,3]")),
            Err(Error::ComponentMismatch)
        );
    }

    #[test]
    fn generic_matches_subwords() {
        let ctxs = [
            GroupContext::a(4).unwrap(),
            GroupContext::bc(3).unwrap(),
            GroupContext::d(4, Component::Identity).unwrap(),
            GroupContext::d(3, Component::Twisted).unwrap(),
        ];
        for ctx in ctxs {
            let elements = enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap();
            for y in &elements {
                let below = below_by_subwords(&ctx, y);
                for x in &elements {
                    assert_eq!(
                        bruhat_leq_generic(&ctx, x, y).unwrap(),
                        below.contains(x),
                        "{ctx}: {x} vs {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn counts_match_generic() {
        for ctx in [GroupContext::a(4).unwrap(), GroupContext::bc(3).unwrap()] {
            let elements = enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap();
            for x in &elements {
                for y in &elements {
                    assert_eq!(
                        bruhat_leq_counts(&ctx, x, y).unwrap(),
                        bruhat_leq_generic(&ctx, x, y).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn d_order_implies_counts_and_b_order() {
        let o = GroupContext::o2n(3).unwrap();
        let b = GroupContext::bc(3).unwrap();
        let elements = enumerate_group(&o, DEFAULT_GROUP_CAP).unwrap();
        for x in &elements {
            for y in &elements {
                if o.component_of(x) != o.component_of(y) {
                    continue;
                }
                if bruhat_leq_generic(&o, x, y).unwrap() {
                    assert!(count_witness(&o, x, y).unwrap().is_none());
                    assert!(bruhat_leq_generic(&b, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn length_strictly_monotone() {
        let ctx = GroupContext::bc(3).unwrap();
        let elements = enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap();
        for x in &elements {
            for y in &elements {
                if x != y && bruhat_leq_generic(&ctx, x, y).unwrap() {
                    assert!(length(&ctx, x).unwrap() < length(&ctx, y).unwrap());
                }
            }
        }
        assert_eq!(simple_reflection_count(&ctx), 3);
    }
}
