use super::{Family, GroupContext, SignedPermutation};
use crate::error::{Error, Result};

/// A simple root in the standard basis `e_1, …, e_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SimpleRoot {
    /// `e_p`
    Short(usize),
    /// `e_q - e_p`
    Diff(usize, usize),
    /// `e_q + e_p`
    Sum(usize, usize),
}

impl SimpleRoot {
    /// Whether `w` sends this root to a negative root.
    #[inline]
    pub(crate) fn sent_negative(self, w: &SignedPermutation) -> bool {
        match self {
            SimpleRoot::Short(p) => w.apply(p as i32) < 0,
            SimpleRoot::Diff(p, q) => w.apply(p as i32) > w.apply(q as i32),
            SimpleRoot::Sum(p, q) => w.apply(p as i32) + w.apply(q as i32) < 0,
        }
    }
}

/// Number of simple reflections of the context's Coxeter system.
pub fn simple_reflection_count(ctx: &GroupContext) -> usize {
    match ctx.family {
        Family::A | Family::TwistedA => ctx.rank - 1,
        Family::BC | Family::D | Family::O2n => ctx.rank,
    }
}

fn check_index(ctx: &GroupContext, i: usize) -> Result<()> {
    if i == 0 || i > simple_reflection_count(ctx) {
        return Err(Error::IndexOutOfRange {
            index: i,
            context: ctx.to_string(),
        });
    }
    Ok(())
}

pub(crate) fn simple_root(ctx: &GroupContext, i: usize) -> SimpleRoot {
    match ctx.family {
        Family::A | Family::TwistedA => SimpleRoot::Diff(i, i + 1),
        Family::BC => {
            if i == 1 {
                SimpleRoot::Short(1)
            } else {
                SimpleRoot::Diff(i - 1, i)
            }
        }
        Family::D | Family::O2n => match i {
            1 => SimpleRoot::Diff(1, 2),
            2 => SimpleRoot::Sum(1, 2),
            _ => SimpleRoot::Diff(i - 1, i),
        },
    }
}

/// Simple reflection `s_i`.
///
/// Type A: `s_i` swaps `i, i+1`. Type BC: `s_1` changes the sign of `1`,
/// `s_i` swaps `i-1, i` for `i ≥ 2`. Type D: `s_1` swaps `1, 2`, `s_2`
/// sends `1 ↦ -2, 2 ↦ -1`, `s_i` swaps `i-1, i` for `i ≥ 3`.
///
/// ```
/// use elliptic_order::weyl::{simple_reflection, GroupContext, Component};
/// let d3 = GroupContext::d(3, Component::Identity).unwrap();
/// assert_eq!(simple_reflection(&d3, 2).unwrap().to_string(), "[-2,-1,3]");
/// ```
pub fn simple_reflection(ctx: &GroupContext, i: usize) -> Result<SignedPermutation> {
    check_index(ctx, i)?;
    Ok(reflection_unchecked(ctx, i))
}

pub(crate) fn reflection_unchecked(ctx: &GroupContext, i: usize) -> SignedPermutation {
    let n = ctx.rank;
    let mut images: Vec<i32> = (1..=n as i32).collect();
    match simple_root(ctx, i) {
        SimpleRoot::Short(p) => images[p - 1] = -(p as i32),
        SimpleRoot::Diff(p, q) => images.swap(p - 1, q - 1),
        SimpleRoot::Sum(p, q) => {
            images[p - 1] = -(q as i32);
            images[q - 1] = -(p as i32);
        }
    }
    SignedPermutation::from_images(&images).expect("simple reflection")
}

/// `s_a s_{a+1} ⋯ s_b`, or the identity when `a > b`.
pub fn s_interval(ctx: &GroupContext, a: usize, b: usize) -> Result<SignedPermutation> {
    let mut w = SignedPermutation::identity(ctx.rank);
    if a > b {
        return Ok(w);
    }
    for i in a..=b {
        w = w.compose(&simple_reflection(ctx, i)?);
    }
    Ok(w)
}

/// Length of `w` with respect to the context's simple reflections.
///
/// Twisted elements `wδ` have length `ℓ(w)`, which for `D` agrees with the
/// formula below because `δ` permutes the positive roots.
pub fn length(ctx: &GroupContext, w: &SignedPermutation) -> Result<usize> {
    ctx.check(w)?;
    Ok(length_unchecked(ctx.family, w))
}

pub(crate) fn length_unchecked(family: Family, w: &SignedPermutation) -> usize {
    let v = w.images();
    let n = v.len();
    let mut inv = 0;
    let mut neg_sum = 0;
    for i in 0..n {
        for j in i + 1..n {
            if v[i] > v[j] {
                inv += 1;
            }
            if (v[i] as i32) + (v[j] as i32) < 0 {
                neg_sum += 1;
            }
        }
    }
    match family {
        Family::A | Family::TwistedA => inv,
        Family::BC => inv + neg_sum + w.negative_count(),
        Family::D | Family::O2n => inv + neg_sum,
    }
}

/// Some `i` with `ℓ(w s_i) < ℓ(w)`, if any.
pub(crate) fn right_descent(ctx: &GroupContext, w: &SignedPermutation) -> Option<usize> {
    (1..=simple_reflection_count(ctx)).find(|&i| simple_root(ctx, i).sent_negative(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{enumerate_group, Component, DEFAULT_GROUP_CAP};

    /// Positive roots as coefficient vectors in `e_1..e_n`.
    fn positive_roots(family: Family, n: usize) -> Vec<Vec<i32>> {
        let mut roots = Vec::new();
        for j in 0..n {
            for i in 0..j {
                let mut r = vec![0; n];
                r[j] = 1;
                r[i] = -1;
                roots.push(r);
                if family.is_signed() {
                    let mut r = vec![0; n];
                    r[j] = 1;
                    r[i] = 1;
                    roots.push(r);
                }
            }
            if family == Family::BC {
                let mut r = vec![0; n];
                r[j] = 1;
                roots.push(r);
            }
        }
        roots
    }

    fn act(w: &SignedPermutation, r: &[i32]) -> Vec<i32> {
        let mut out = vec![0; r.len()];
        for (k, &c) in r.iter().enumerate() {
            let img = w.apply(k as i32 + 1);
            out[img.unsigned_abs() as usize - 1] += c * img.signum();
        }
        out
    }

    fn is_positive(r: &[i32]) -> bool {
        r.iter().rev().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    /// Length as the number of positive roots sent negative.
    fn root_count_length(family: Family, w: &SignedPermutation) -> usize {
        positive_roots(family, w.rank())
            .iter()
            .filter(|r| !is_positive(&act(w, r)))
            .count()
    }

    /// Length as the distance from the identity in the Cayley graph.
    fn bfs_lengths(ctx: &GroupContext) -> std::collections::HashMap<SignedPermutation, usize> {
        let gens: Vec<_> = (1..=simple_reflection_count(ctx))
            .map(|i| simple_reflection(ctx, i).unwrap())
            .collect();
        let start = if ctx.component == Component::Twisted && ctx.family == Family::D {
            ctx.delta()
        } else {
            SignedPermutation::identity(ctx.rank)
        };
        let mut dist = std::collections::HashMap::new();
        dist.insert(start, 0);
        let mut frontier = vec![start];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for w in &frontier {
                for s in &gens {
                    let ws = w.compose(s);
                    if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(ws) {
                        e.insert(d);
                        next.push(ws);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    #[test]
    fn reflections() {
        let bc2 = GroupContext::bc(2).unwrap();
        assert_eq!(simple_reflection(&bc2, 1).unwrap().to_string(), "[-1,2]");
        assert_eq!(simple_reflection(&bc2, 2).unwrap().to_string(), "[2,1]");
        assert!(simple_reflection(&bc2, 3).is_err());
        assert!(simple_reflection(&bc2, 0).is_err());
        let a3 = GroupContext::a(3).unwrap();
        assert!(simple_reflection(&a3, 3).is_err());
        for ctx in [bc2, a3, GroupContext::d(4, Component::Identity).unwrap()] {
            for i in 1..=simple_reflection_count(&ctx) {
                let s = simple_reflection(&ctx, i).unwrap();
                assert!(s.multiply(&s).unwrap().is_identity());
                assert_eq!(length(&ctx, &s).unwrap(), 1);
            }
        }
    }

    #[test]
    fn intervals() {
        let bc3 = GroupContext::bc(3).unwrap();
        assert!(s_interval(&bc3, 2, 1).unwrap().is_identity());
        let s = |i| simple_reflection(&bc3, i).unwrap();
        assert_eq!(
            s_interval(&bc3, 1, 3).unwrap(),
            s(1).multiply(&s(2)).unwrap().multiply(&s(3)).unwrap()
        );
        for n in 1..=6 {
            let ctx = GroupContext::bc(n).unwrap();
            assert_eq!(length(&ctx, &s_interval(&ctx, 1, n).unwrap()).unwrap(), n);
        }
        assert!(s_interval(&bc3, 1, 4).is_err());
    }

    #[test]
    fn length_examples() {
        let bc2 = GroupContext::bc(2).unwrap();
        assert_eq!(length(&bc2, &SignedPermutation::identity(2)).unwrap(), 0);
        assert_eq!(length(&bc2, &SignedPermutation::negation(2)).unwrap(), 4);
        let d3 = GroupContext::d(3, Component::Identity).unwrap();
        assert!(matches!(
            length(&d3, &"[-1,2,3]".parse().unwrap()),
            Err(Error::NotInGroup { .. })
        ));
        let d3t = GroupContext::d(3, Component::Twisted).unwrap();
        assert_eq!(length(&d3t, &d3t.delta()).unwrap(), 0);
    }

    #[test]
    fn length_matches_root_count_and_word_length() {
        let ctxs = [
            GroupContext::a(4).unwrap(),
            GroupContext::bc(4).unwrap(),
            GroupContext::d(4, Component::Identity).unwrap(),
            GroupContext::d(4, Component::Twisted).unwrap(),
        ];
        for ctx in ctxs {
            let words = bfs_lengths(&ctx);
            let elements = enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap();
            assert_eq!(words.len(), elements.len());
            for w in &elements {
                let l = length(&ctx, w).unwrap();
                assert_eq!(l, root_count_length(ctx.family, w), "{ctx} {w}");
                assert_eq!(l, words[w], "{ctx} {w}");
            }
        }
    }

    #[test]
    fn descents_lower_length() {
        let ctx = GroupContext::bc(3).unwrap();
        for w in enumerate_group(&ctx, DEFAULT_GROUP_CAP).unwrap() {
            let l = length(&ctx, &w).unwrap();
            for i in 1..=3 {
                let ws = w.compose(&simple_reflection(&ctx, i).unwrap());
                let down = simple_root(&ctx, i).sent_negative(&w);
                let expected = if down { l - 1 } else { l + 1 };
                assert_eq!(length(&ctx, &ws).unwrap(), expected);
            }
            assert_eq!(right_descent(&ctx, &w).is_none(), l == 0);
        }
    }
}
