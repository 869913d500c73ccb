//! The map `Φ` from elliptic conjugacy classes of a classical Weyl group
//! (or one of its twisted cosets) to unipotent classes, and an exhaustive
//! check that it reverses the order `⪯_W` into the closure order.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::classposet::ClassCatalog;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::unipotent::{
    theta2, unipotent_leq, BadLabel, Characteristic, ClassicalType, EpsilonFamily, FormKind,
    Group, UnipotentLabel,
};
use crate::weyl::{Component, EllipticClassLabel, Family, GroupContext};

/// A classical group, a characteristic and a component of the group.
///
/// The non-identity component exists for `GL†(n)` (twisted type A) and
/// `O(2n)` (twisted type D).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupSpec {
    pub group: Group,
    pub characteristic: Characteristic,
    pub component: Component,
}

impl GroupSpec {
    pub fn new(group: Group, characteristic: Characteristic, component: Component) -> Result<Self> {
        let twisted_ok = matches!(group, Group::GlDagger(_) | Group::EvenOrthogonal(_));
        if component == Component::Twisted && !twisted_ok {
            return Err(Error::UnsupportedFamily(format!("{group} has one component")));
        }
        let n = group.rank();
        let min = match group {
            Group::EvenOrthogonal(_) | Group::SpecialEvenOrthogonal(_) => 2,
            _ => 1,
        };
        if (n as usize) < min || n as usize > crate::weyl::MAX_RANK {
            return Err(Error::UnsupportedRank {
                rank: n as usize,
                min,
                max: crate::weyl::MAX_RANK,
            });
        }
        Ok(GroupSpec {
            group,
            characteristic,
            component,
        })
    }

    /// The Weyl group context whose elliptic classes `Φ` is defined on.
    pub fn weyl_context(&self) -> Result<GroupContext> {
        let n = self.group.rank() as usize;
        match (self.group, self.component) {
            (Group::Gl(_), _) | (Group::GlDagger(_), Component::Identity) => GroupContext::a(n),
            (Group::GlDagger(_), Component::Twisted) => GroupContext::twisted_a(n),
            (Group::OddOrthogonal(_), _) | (Group::Symplectic(_), _) => GroupContext::bc(n),
            (Group::EvenOrthogonal(_), c) | (Group::SpecialEvenOrthogonal(_), c) => {
                GroupContext::d(n, c)
            }
        }
    }

    /// Whether the chosen component contains unipotent elements.
    pub fn has_unipotents(&self) -> bool {
        self.component == Component::Identity || self.characteristic == Characteristic::Two
    }

    fn with_char(self, characteristic: Characteristic) -> Self {
        GroupSpec {
            characteristic,
            ..self
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} char {}", self.group, self.characteristic)?;
        if self.component == Component::Twisted {
            f.write_str(" twisted")?;
        }
        Ok(())
    }
}

/// The elliptic class labels of `spec.weyl_context()`.
pub fn elliptic_classes(spec: &GroupSpec) -> Result<Vec<EllipticClassLabel>> {
    EllipticClassLabel::all(&spec.weyl_context()?)
}

fn check_class(spec: &GroupSpec, c: &EllipticClassLabel) -> Result<()> {
    let ctx = spec.weyl_context()?;
    let l = c.ctx();
    if l.family != ctx.family || l.rank != ctx.rank || l.component != ctx.component {
        return Err(Error::ContextMismatch(format!(
            "class {c} of {l} is not an elliptic class for {spec}"
        )));
    }
    Ok(())
}

/// `2α + ψ_{2α}`, where `ψ_{2α}` equals `ψ_α` because doubling keeps the
/// strict inequalities between parts.
fn doubled_plus_psi(alpha: &Partition) -> Result<Partition> {
    debug_assert_eq!(alpha.psi()?, alpha.scale(2).psi()?);
    alpha.scale(2).add_psi()
}

/// `Φ(C_α)`:
///
/// | group | good characteristic | characteristic 2 |
/// |---|---|---|
/// | `GL(n)` | `(n)` | `(n)` |
/// | `GL†(n)`, twisted | none | `(α, ε_max)` |
/// | `SO(2n+1)` | `2α+ψ`, with a part 1 appended when `α` has an even number of parts | `(2α, ε_max)` |
/// | `Sp(2n)` | `2α` | `(2α, ε_max)` |
/// | `O(2n)`, `SO(2n)` | `2α+ψ` (identity component only) | `(2α, ε_max)` |
///
/// ```
/// use elliptic_order::lusztig::{phi, GroupSpec};
/// use elliptic_order::unipotent::{Characteristic, Group};
/// use elliptic_order::weyl::{Component, EllipticClassLabel};
///
/// let spec = GroupSpec::new(Group::SpecialEvenOrthogonal(4), Characteristic::Good, Component::Identity).unwrap();
/// let c = EllipticClassLabel::new(spec.weyl_context().unwrap(), "[2,2]".parse().unwrap()).unwrap();
/// assert_eq!(phi(&spec, &c).unwrap().to_string(), "[5,3]");
/// ```
pub fn phi(spec: &GroupSpec, c: &EllipticClassLabel) -> Result<UnipotentLabel> {
    check_class(spec, c)?;
    if !spec.has_unipotents() {
        return Err(Error::NoUnipotents(format!(
            "the twisted component of {} in good characteristic",
            spec.group
        )));
    }
    let alpha = c.partition();
    let g = spec.group;
    let two = spec.characteristic == Characteristic::Two;
    match g {
        Group::Gl(n) | Group::GlDagger(n) if spec.component == Component::Identity => {
            UnipotentLabel::good(g, Partition::new(vec![n])?)
        }
        Group::Gl(_) | Group::GlDagger(_) => {
            UnipotentLabel::bad(g, BadLabel::with_max(alpha.clone(), EpsilonFamily::PlusOne)?)
        }
        Group::OddOrthogonal(_) | Group::Symplectic(_) if two => UnipotentLabel::bad(
            g,
            BadLabel::with_max(alpha.scale(2), EpsilonFamily::MinusOne(FormKind::Symplectic))?,
        ),
        Group::EvenOrthogonal(_) | Group::SpecialEvenOrthogonal(_) if two => UnipotentLabel::bad(
            g,
            BadLabel::with_max(alpha.scale(2), EpsilonFamily::MinusOne(FormKind::Orthogonal))?,
        ),
        Group::Symplectic(_) => UnipotentLabel::good(g, alpha.scale(2)),
        Group::OddOrthogonal(_) => {
            let gamma = doubled_plus_psi(alpha)?;
            let gamma = if alpha.len().is_multiple_of(2) {
                gamma.append_one()
            } else {
                gamma
            };
            UnipotentLabel::good(g, gamma)
        }
        Group::EvenOrthogonal(_) | Group::SpecialEvenOrthogonal(_) => {
            UnipotentLabel::good(g, doubled_plus_psi(alpha)?)
        }
    }
}

/// Checks that `θ₂(Φ_2(C_α))` is the partition of `Φ_good(C_α)`.
///
/// Defined for `Sp(2n)`, `SO(2n+1)` and the identity component of
/// `O(2n)`/`SO(2n)`.
pub fn phi_good_char_equals_theta2_of_phi_char2(
    spec: &GroupSpec,
    c: &EllipticClassLabel,
) -> Result<bool> {
    let ty = match spec.group {
        Group::Symplectic(_) => ClassicalType::C,
        Group::OddOrthogonal(_) => ClassicalType::B,
        Group::EvenOrthogonal(_) | Group::SpecialEvenOrthogonal(_) => ClassicalType::D,
        g => return Err(Error::UnsupportedFamily(format!("θ₂ is not defined for {g}"))),
    };
    let good = phi(&spec.with_char(Characteristic::Good), c)?;
    let bad = phi(&spec.with_char(Characteristic::Two), c)?;
    let crate::unipotent::Variant::Bad(b) = &bad.variant else {
        return Err(Error::LabelMismatch(format!("{bad} is not a characteristic-2 label")));
    };
    Ok(&theta2(b, ty)? == good.partition())
}

/// One row of an elliptic map table.
#[derive(Clone, Debug, Serialize)]
pub struct MapRow {
    pub class: EllipticClassLabel,
    pub good: Option<UnipotentLabel>,
    pub char2: Option<UnipotentLabel>,
}

impl fmt::Display for MapRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |l: &Option<UnipotentLabel>| l.as_ref().map_or("-".to_string(), |l| l.to_string());
        write!(f, "{} {} {}", self.class.partition(), show(&self.good), show(&self.char2))
    }
}

/// `(class, Φ_good, Φ_2)` for every elliptic class of the component, in
/// reverse-lexicographic order of the class partitions. The characteristic
/// field of `spec` is ignored. An image is `None` when the component has no
/// unipotent elements in that characteristic.
pub fn map_table(spec: &GroupSpec) -> Result<Vec<MapRow>> {
    let good = spec.with_char(Characteristic::Good);
    let bad = spec.with_char(Characteristic::Two);
    elliptic_classes(spec)?
        .into_iter()
        .map(|class| {
            let image = |s: &GroupSpec| {
                if s.has_unipotents() {
                    phi(s, &class).map(Some)
                } else {
                    Ok(None)
                }
            };
            Ok(MapRow {
                good: image(&good)?,
                char2: image(&bad)?,
                class,
            })
        })
        .collect()
}

/// A pair `(α, β)` on which the three relations disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairFailure {
    pub alpha: Partition,
    pub beta: Partition,
    /// `C_β ⪯_W C_α`
    pub weyl: bool,
    /// `α ≤ β`
    pub dominance: bool,
    /// `Φ(C_α) ⪯ Φ(C_β)`
    pub unipotent: bool,
}

/// Outcome of [`verify_theorem`]; `failures` is empty on success.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub family: String,
    pub group: String,
    pub n: usize,
    #[serde(rename = "char")]
    pub characteristic: Characteristic,
    pub component: String,
    pub pairs: usize,
    pub failures: Vec<PairFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every ordered pair of elliptic classes `(α, β)` of the component,
/// compares
///
/// * `C_β ⪯_W C_α`, by brute force over the group,
/// * `α ≤ β` in the dominance order,
/// * `Φ(C_α) ⪯ Φ(C_β)` in the unipotent closure order,
///
/// and records every pair where they disagree.
pub fn verify_theorem(spec: &GroupSpec, cap: u128) -> Result<VerifyReport> {
    if !spec.has_unipotents() {
        return Err(Error::NoUnipotents(format!(
            "the twisted component of {} in good characteristic",
            spec.group
        )));
    }
    let ctx = spec.weyl_context()?;
    let catalog = ClassCatalog::build(&ctx, cap)?;
    let labels = catalog.labels();
    let images = labels
        .iter()
        .map(|c| phi(spec, c))
        .collect::<Result<Vec<_>>>()?;
    let m = labels.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let verdicts = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&labels[i], &labels[j]);
            let weyl = catalog.leq(b, a)?;
            let dominance = a.partition().dominance_leq(b.partition())?;
            let unipotent = unipotent_leq(&images[i], &images[j])?;
            let ok = weyl == dominance && dominance == unipotent;
            Ok((!ok).then(|| PairFailure {
                alpha: a.partition().clone(),
                beta: b.partition().clone(),
                weyl,
                dominance,
                unipotent,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        family: ctx.family.name().to_string(),
        group: spec.group.to_string(),
        n: ctx.rank,
        characteristic: spec.characteristic,
        component: spec.component.to_string(),
        pairs: pairs.len(),
        failures: verdicts.into_iter().flatten().collect(),
    })
}

/// Whether `Φ` is injective on the elliptic classes of the component.
pub fn phi_is_injective(spec: &GroupSpec) -> Result<bool> {
    let mut images = elliptic_classes(spec)?
        .iter()
        .map(|c| phi(spec, c))
        .collect::<Result<Vec<_>>>()?;
    let before = images.len();
    images.sort();
    images.dedup();
    Ok(images.len() == before)
}

/// The Weyl family a group's twisted or untwisted classes live in.
pub fn family_of(spec: &GroupSpec) -> Result<Family> {
    Ok(spec.weyl_context()?.family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_GROUP_CAP;

    fn spec(g: Group, p: Characteristic) -> GroupSpec {
        GroupSpec::new(g, p, Component::Identity).unwrap()
    }

    fn rows(s: &GroupSpec) -> Vec<String> {
        map_table(s).unwrap().iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn sp4_table() {
        assert_eq!(
            rows(&spec(Group::Symplectic(2), Characteristic::Good)),
            vec!["[2] [4] ([4],*)", "[1,1] [2,2] ([2,2],ε(2)=1)"]
        );
    }

    #[test]
    fn so8_images() {
        let s = spec(Group::SpecialEvenOrthogonal(4), Characteristic::Good);
        assert_eq!(
            rows(&s),
            vec![
                "[3,1] [7,1] ([6,2],*)",
                "[2,2] [5,3] ([4,4],ε(4)=1)",
                "[1,1,1,1] [3,2,2,1] ([2,2,2,2],ε(2)=1)"
            ]
        );
    }

    #[test]
    fn so12_char2_images() {
        let s = spec(Group::SpecialEvenOrthogonal(6), Characteristic::Two);
        let ctx = s.weyl_context().unwrap();
        let c = |t: &str| EllipticClassLabel::new(ctx, t.parse().unwrap()).unwrap();
        assert_eq!(phi(&s, &c("[3,3]")).unwrap().to_string(), "([6,6],ε(6)=1)");
        assert_eq!(
            phi(&s, &c("[2,2,1,1]")).unwrap().to_string(),
            "([4,4,2,2],ε(4)=ε(2)=1)"
        );
    }

    #[test]
    fn odd_orthogonal_images() {
        let s = spec(Group::OddOrthogonal(3), Characteristic::Good);
        let ctx = s.weyl_context().unwrap();
        let c = |t: &str| EllipticClassLabel::new(ctx, t.parse().unwrap()).unwrap();
        assert_eq!(phi(&s, &c("[3]")).unwrap().to_string(), "[7]");
        assert_eq!(phi(&s, &c("[2,1]")).unwrap().to_string(), "[5,1,1]");
        assert_eq!(phi(&s, &c("[1,1,1]")).unwrap().to_string(), "[3,2,2]");
    }

    #[test]
    fn twisted_components() {
        let gd = GroupSpec::new(Group::GlDagger(3), Characteristic::Two, Component::Twisted).unwrap();
        let labels: Vec<String> = elliptic_classes(&gd)
            .unwrap()
            .iter()
            .map(|c| phi(&gd, c).unwrap().to_string())
            .collect();
        assert_eq!(labels, vec!["([3],*)", "([1,1,1],*)"]);
        let good = GroupSpec::new(Group::GlDagger(3), Characteristic::Good, Component::Twisted).unwrap();
        let c = &elliptic_classes(&good).unwrap()[0];
        assert!(matches!(phi(&good, c), Err(Error::NoUnipotents(_))));
        let o = GroupSpec::new(Group::EvenOrthogonal(3), Characteristic::Two, Component::Twisted).unwrap();
        for c in elliptic_classes(&o).unwrap() {
            let u = phi(&o, &c).unwrap();
            assert_eq!(u.so_component, Some(crate::unipotent::SoComponent::Outside));
        }
        assert!(GroupSpec::new(Group::Symplectic(3), Characteristic::Two, Component::Twisted).is_err());
    }

    #[test]
    fn gl_maps_coxeter_to_n() {
        for n in 1..=6 {
            let s = spec(Group::Gl(n), Characteristic::Good);
            let t = map_table(&s).unwrap();
            assert_eq!(t.len(), 1);
            assert_eq!(t[0].good.as_ref().unwrap().partition(), &Partition::new(vec![n]).unwrap());
        }
    }

    #[test]
    fn wrong_context_is_rejected() {
        let s = spec(Group::Symplectic(3), Characteristic::Good);
        let d = GroupContext::d(3, Component::Twisted).unwrap();
        let c = EllipticClassLabel::new(d, "[3]".parse().unwrap()).unwrap();
        assert!(matches!(phi(&s, &c), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn injective_and_commuting() {
        for n in 1..=10u32 {
            for g in [Group::Symplectic(n), Group::OddOrthogonal(n)] {
                for p in [Characteristic::Good, Characteristic::Two] {
                    assert!(phi_is_injective(&spec(g, p)).unwrap(), "{g}");
                }
                let s = spec(g, Characteristic::Good);
                for c in elliptic_classes(&s).unwrap() {
                    assert!(phi_good_char_equals_theta2_of_phi_char2(&s, &c).unwrap(), "{g} {c}");
                }
            }
            if n >= 2 {
                for comp in [Component::Identity, Component::Twisted] {
                    let s = GroupSpec::new(Group::EvenOrthogonal(n), Characteristic::Two, comp).unwrap();
                    assert!(phi_is_injective(&s).unwrap());
                }
                let s = spec(Group::SpecialEvenOrthogonal(n), Characteristic::Good);
                assert!(phi_is_injective(&s).unwrap());
                for c in elliptic_classes(&s).unwrap() {
                    assert!(phi_good_char_equals_theta2_of_phi_char2(&s, &c).unwrap(), "{c}");
                }
            }
            let t = GroupSpec::new(Group::GlDagger(n), Characteristic::Two, Component::Twisted).unwrap();
            assert!(phi_is_injective(&t).unwrap());
        }
    }

    #[test]
    fn verify_small() {
        for n in 2..=4u32 {
            for p in [Characteristic::Good, Characteristic::Two] {
                let r = verify_theorem(&spec(Group::Symplectic(n), p), DEFAULT_GROUP_CAP).unwrap();
                assert!(r.passed(), "{r:?}");
                let r = verify_theorem(&spec(Group::EvenOrthogonal(n), p), DEFAULT_GROUP_CAP).unwrap();
                assert!(r.passed(), "{r:?}");
            }
            let o = GroupSpec::new(Group::EvenOrthogonal(n), Characteristic::Two, Component::Twisted).unwrap();
            assert!(verify_theorem(&o, DEFAULT_GROUP_CAP).unwrap().passed());
            let t = GroupSpec::new(Group::GlDagger(n), Characteristic::Two, Component::Twisted).unwrap();
            assert!(verify_theorem(&t, DEFAULT_GROUP_CAP).unwrap().passed());
        }
        let r = verify_theorem(&spec(Group::Symplectic(3), Characteristic::Two), DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(r.pairs, 9);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["family"], "BC");
        assert_eq!(json["char"], "2");
        assert_eq!(json["failures"], serde_json::json!([]));
    }
}
