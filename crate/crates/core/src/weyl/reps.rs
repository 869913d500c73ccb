use super::roots::s_interval;
use super::{EllipticClassLabel, Family, GroupContext, SignedPermutation};
use crate::error::{Error, Result};
use crate::partitions::Partition;

fn check_sum(n: usize, alpha: &Partition) -> Result<()> {
    if alpha.total() as usize != n || alpha.is_empty() {
        return Err(Error::SumMismatch {
            partition: alpha.clone(),
            rank: n,
        });
    }
    Ok(())
}

/// Minimal-length element of the elliptic class `α` of `BC(n)`:
/// the product over `k` of `s_{[2, n+1-A_k]}⁻¹ s_{[1, n-A_{k-1}]}` where
/// `A_k = α_1 + ⋯ + α_k`.
///
/// ```
/// use elliptic_order::weyl::{rep_bc, length, GroupContext};
/// let w = rep_bc(3, &"[2,1]".parse().unwrap()).unwrap();
/// assert_eq!(w.to_string(), "[-1,3,-2]");
/// assert_eq!(length(&GroupContext::bc(3).unwrap(), &w).unwrap(), 5);
/// ```
pub fn rep_bc(n: usize, alpha: &Partition) -> Result<SignedPermutation> {
    check_sum(n, alpha)?;
    let ctx = GroupContext::bc(n)?;
    let mut w = SignedPermutation::identity(n);
    for k in 1..=alpha.len() {
        let a_prev = alpha.prefix_sum(k - 1) as usize;
        let a_k = alpha.prefix_sum(k) as usize;
        let left = s_interval(&ctx, 2, n + 1 - a_k)?.inverse();
        let right = s_interval(&ctx, 1, n - a_prev)?;
        w = w.compose(&left).compose(&right);
    }
    Ok(w)
}

/// Minimal-length element of the elliptic class `α` of `D(n)`, lying in the
/// twisted coset exactly when `α` has an odd number of parts.
///
/// The product runs over `w_{A_{k-1}, A_k}` with
/// `w_{a,b} = s_{[3, n+1-b]}⁻¹ s_{[1, n-a]}` for `b < n`; the last factor
/// (`b = n`) is `s_{[2, n-a]}`. A trailing `δ` is applied when the number of
/// parts is odd.
pub fn rep_d(n: usize, alpha: &Partition) -> Result<SignedPermutation> {
    check_sum(n, alpha)?;
    let ctx = GroupContext::d(n, super::Component::Identity)?;
    let mut w = SignedPermutation::identity(n);
    let l = alpha.len();
    for k in 1..=l {
        let a = alpha.prefix_sum(k - 1) as usize;
        let b = alpha.prefix_sum(k) as usize;
        let factor = if b < n {
            s_interval(&ctx, 3, n + 1 - b)?
                .inverse()
                .compose(&s_interval(&ctx, 1, n - a)?)
        } else {
            s_interval(&ctx, 2, n - a)?
        };
        w = w.compose(&factor);
    }
    if l % 2 == 1 {
        w = w.compose(&ctx.delta());
    }
    Ok(w)
}

/// Minimal-length element of the twisted class `α` (odd parts) of `S_n·δ`,
/// returned as the plain permutation `P` standing for `Pδ`.
///
/// With `b_k = (α_k + 1)/2` and `B_k = b_1 + ⋯ + b_k`,
/// `P = ∏_k s_{[B_{k-1}+1, n+k-1-B_k]}⁻¹`.
pub fn rep_2a(n: usize, alpha: &Partition) -> Result<SignedPermutation> {
    check_sum(n, alpha)?;
    if !alpha.all_odd() {
        return Err(Error::EvenPart(alpha.clone()));
    }
    let ctx = GroupContext::a(n)?;
    let mut w = SignedPermutation::identity(n);
    let mut b_prev = 0usize;
    for (k, &part) in alpha.parts().iter().enumerate() {
        let b_k = b_prev + (part as usize).div_ceil(2);
        let lo = b_prev + 1;
        let hi = n + k - b_k;
        w = w.compose(&s_interval(&ctx, lo, hi)?.inverse());
        b_prev = b_k;
    }
    Ok(w)
}

/// The Coxeter element `s_1 s_2 ⋯ s_{n-1}` of `S_n`.
pub fn rep_a(n: usize) -> Result<SignedPermutation> {
    let ctx = GroupContext::a(n)?;
    s_interval(&ctx, 1, n - 1)
}

/// Closed-form minimal-length representative of a class label.
pub fn representative(label: &EllipticClassLabel) -> Result<SignedPermutation> {
    let ctx = label.ctx();
    let n = ctx.rank;
    match ctx.family {
        Family::A => rep_a(n),
        Family::BC => rep_bc(n, label.partition()),
        Family::D | Family::O2n => rep_d(n, label.partition()),
        Family::TwistedA => rep_2a(n, label.partition()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::weyl::{
        class_label, length, min_length_elements, simple_reflection, Component,
        DEFAULT_GROUP_CAP,
    };

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn bc_examples() {
        for n in 1..=6 {
            let ctx = GroupContext::bc(n).unwrap();
            let alpha = Partition::new(vec![n as u32]).unwrap();
            assert_eq!(rep_bc(n, &alpha).unwrap(), s_interval(&ctx, 1, n).unwrap());
        }
        let bc2 = GroupContext::bc(2).unwrap();
        let s = |i| simple_reflection(&bc2, i).unwrap();
        let expected = s(2).compose(&s(1)).compose(&s(2)).compose(&s(1));
        assert_eq!(rep_bc(2, &p("[1,1]")).unwrap(), expected);
        assert_eq!(expected, SignedPermutation::negation(2));
        assert!(matches!(
            rep_bc(3, &p("[2]")),
            Err(Error::SumMismatch { .. })
        ));
    }

    #[test]
    fn d_single_part_is_not_delta() {
        // with one part the class is the twisted Coxeter class, of length n-1
        for n in 2..=6 {
            let ctx = GroupContext::d(n, Component::Twisted).unwrap();
            let w = rep_d(n, &Partition::new(vec![n as u32]).unwrap()).unwrap();
            assert_eq!(length(&ctx, &w).unwrap(), n - 1);
            assert_eq!(class_label(&ctx, &w).unwrap().partition().parts(), &[n as u32]);
        }
    }

    #[test]
    fn twisted_a_examples() {
        // all ones: the class of δ itself, whose minimal element is w₀δ
        for n in 1..=6 {
            let w = rep_2a(n, &Partition::new(vec![1; n]).unwrap()).unwrap();
            assert_eq!(w, SignedPermutation::reversal(n));
        }
        let w = rep_2a(3, &p("[3]")).unwrap();
        assert_eq!(w.to_string(), "[2,1,3]");
        assert!(matches!(rep_2a(4, &p("[2,2]")), Err(Error::EvenPart(_))));
    }

    #[test]
    fn representatives_are_minimal_in_their_class() {
        let mut ctxs = Vec::new();
        for n in 1..=5 {
            ctxs.push(GroupContext::bc(n).unwrap());
            ctxs.push(GroupContext::twisted_a(n).unwrap());
            ctxs.push(GroupContext::a(n).unwrap());
        }
        for n in 2..=5 {
            ctxs.push(GroupContext::d(n, Component::Identity).unwrap());
            ctxs.push(GroupContext::d(n, Component::Twisted).unwrap());
        }
        for ctx in ctxs {
            for label in EllipticClassLabel::all(&ctx).unwrap() {
                let w = representative(&label).unwrap();
                assert_eq!(class_label(&ctx, &w).as_ref(), Some(&label), "{ctx} {label}");
                let mins = min_length_elements(&ctx, &label, DEFAULT_GROUP_CAP).unwrap();
                assert!(mins.contains(&w), "{ctx} {label}: {w} not minimal");
            }
        }
    }

    #[test]
    fn bc_inequality_at_representatives() {
        // w_β[n-m, n-m+1] = k when m = β_1 + ⋯ + β_k
        use crate::weyl::count_matrix;
        for n in 1..=6u32 {
            let ctx = GroupContext::bc(n as usize).unwrap();
            for beta in partitions_of(n) {
                let w = rep_bc(n as usize, &beta).unwrap();
                let m = count_matrix(&ctx, &w);
                for k in 0..=beta.len() {
                    let s = beta.prefix_sum(k) as i32;
                    let i = n as i32 - s;
                    assert_eq!(m.get(i, i + 1), k as u32, "{beta} k={k}");
                }
            }
        }
    }
}
