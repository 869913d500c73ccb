//! Parameters of unipotent classes in classical groups, in good
//! characteristic (partitions) and in characteristic 2 (partitions with an
//! ε-function), with their closure orders and the map `θ₂`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Kappa, Partition, PartitionFamily, DEFAULT_ENUMERATION_BOUND};

/// Good characteristic (0 or odd) versus characteristic 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Characteristic {
    #[serde(rename = "good")]
    Good,
    #[serde(rename = "2")]
    Two,
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Characteristic::Good => "good",
            Characteristic::Two => "2",
        })
    }
}

impl FromStr for Characteristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "good" | "0" => Ok(Characteristic::Good),
            "2" => Ok(Characteristic::Two),
            _ => Err(Error::Parse(format!("unknown characteristic {s:?}"))),
        }
    }
}

/// Value of an ε-function, ordered `ω < 0 < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EpsilonValue {
    Omega,
    Zero,
    One,
}

impl EpsilonValue {
    /// `max(v, 0)` as an integer.
    fn positive_part(self) -> i64 {
        i64::from(self == EpsilonValue::One)
    }
}

impl fmt::Display for EpsilonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EpsilonValue::Omega => "ω",
            EpsilonValue::Zero => "0",
            EpsilonValue::One => "1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormKind {
    Symplectic,
    Orthogonal,
}

/// Which forcing rules an ε-function follows.
///
/// `MinusOne`: partitions with odd parts of even multiplicity; ε is free at
/// even parts of even multiplicity. `PlusOne`: partitions with even parts of
/// even multiplicity; ε is free at odd parts of even multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EpsilonFamily {
    MinusOne(FormKind),
    PlusOne,
}

impl EpsilonFamily {
    fn partition_family(self, total: u32) -> PartitionFamily {
        match self {
            EpsilonFamily::MinusOne(_) => PartitionFamily::Kappa(total, Kappa::Minus),
            EpsilonFamily::PlusOne => PartitionFamily::Kappa(total, Kappa::Plus),
        }
    }

    /// Whether `alpha` can carry an ε-function of this family.
    pub fn admits(self, alpha: &Partition) -> bool {
        let total_ok = match self {
            EpsilonFamily::MinusOne(_) => alpha.total().is_multiple_of(2),
            EpsilonFamily::PlusOne => true,
        };
        total_ok && self.partition_family(alpha.total()).contains(alpha)
    }

    /// The forced value at `i`, or `None` where there is a free choice.
    pub fn forced(self, alpha: &Partition, i: u32) -> Option<EpsilonValue> {
        let m = alpha.multiplicity(i);
        match self {
            EpsilonFamily::MinusOne(kind) => {
                if i == 0 {
                    Some(match kind {
                        FormKind::Symplectic => EpsilonValue::One,
                        FormKind::Orthogonal => EpsilonValue::Zero,
                    })
                } else if i % 2 == 1 || m == 0 {
                    Some(EpsilonValue::Omega)
                } else if m % 2 == 1 {
                    Some(EpsilonValue::One)
                } else {
                    None
                }
            }
            EpsilonFamily::PlusOne => {
                if i.is_multiple_of(2) || m == 0 {
                    Some(EpsilonValue::Omega)
                } else if m % 2 == 1 {
                    Some(EpsilonValue::One)
                } else {
                    None
                }
            }
        }
    }

    /// Indices with a free choice, in decreasing order.
    pub fn free_indices(self, alpha: &Partition) -> Vec<u32> {
        let mut parts: Vec<u32> = alpha.parts().to_vec();
        parts.dedup();
        parts
            .into_iter()
            .filter(|&i| self.forced(alpha, i).is_none())
            .collect()
    }
}

/// An ε-function stored by its free choices only; forced values are
/// recomputed from the partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EpsilonFunction {
    family: EpsilonFamily,
    assignments: BTreeMap<u32, EpsilonValue>,
}

impl EpsilonFunction {
    pub fn family(&self) -> EpsilonFamily {
        self.family
    }

    /// The free choices.
    pub fn assignments(&self) -> &BTreeMap<u32, EpsilonValue> {
        &self.assignments
    }
}

/// `ε_max`: value 1 at every free index.
///
/// ```
/// use elliptic_order::unipotent::{epsilon_max, EpsilonFamily, EpsilonValue, FormKind};
/// let e = epsilon_max(&"[4,4]".parse().unwrap(), EpsilonFamily::MinusOne(FormKind::Orthogonal)).unwrap();
/// assert_eq!(e.assignments().get(&4), Some(&EpsilonValue::One));
/// ```
pub fn epsilon_max(alpha: &Partition, family: EpsilonFamily) -> Result<EpsilonFunction> {
    if !family.admits(alpha) {
        return Err(Error::InvalidForFamily {
            partition: alpha.clone(),
            family: format!("{family:?}"),
        });
    }
    Ok(EpsilonFunction {
        family,
        assignments: family
            .free_indices(alpha)
            .into_iter()
            .map(|i| (i, EpsilonValue::One))
            .collect(),
    })
}

/// A characteristic-2 parameter `(α, ε)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BadLabel {
    partition: Partition,
    epsilon: EpsilonFunction,
}

impl BadLabel {
    /// `choices` must assign `Zero` or `One` to exactly the free indices.
    pub fn new(
        partition: Partition,
        family: EpsilonFamily,
        choices: impl IntoIterator<Item = (u32, EpsilonValue)>,
    ) -> Result<Self> {
        if !family.admits(&partition) {
            return Err(Error::InvalidForFamily {
                partition,
                family: format!("{family:?}"),
            });
        }
        let assignments: BTreeMap<u32, EpsilonValue> = choices.into_iter().collect();
        let mut free = family.free_indices(&partition);
        free.sort_unstable();
        let keys: Vec<u32> = assignments.keys().copied().collect();
        if keys != free {
            return Err(Error::InvalidEpsilon(format!(
                "{partition}: choices given at {keys:?}, free indices are {free:?}"
            )));
        }
        if assignments.values().any(|&v| v == EpsilonValue::Omega) {
            return Err(Error::InvalidEpsilon(format!(
                "{partition}: free values must be 0 or 1"
            )));
        }
        Ok(BadLabel {
            partition,
            epsilon: EpsilonFunction {
                family,
                assignments,
            },
        })
    }

    pub fn with_max(partition: Partition, family: EpsilonFamily) -> Result<Self> {
        let epsilon = epsilon_max(&partition, family)?;
        Ok(BadLabel { partition, epsilon })
    }

    /// Every valid ε for `partition`.
    pub fn all_for(partition: &Partition, family: EpsilonFamily) -> Result<Vec<Self>> {
        if !family.admits(partition) {
            return Err(Error::InvalidForFamily {
                partition: partition.clone(),
                family: format!("{family:?}"),
            });
        }
        let free = family.free_indices(partition);
        let mut out = Vec::new();
        // 1 before 0 at each index, so ε_max comes first
        for mask in 0..(1u64 << free.len()) {
            let choices = free.iter().enumerate().map(|(b, &i)| {
                let v = if mask >> b & 1 == 0 {
                    EpsilonValue::One
                } else {
                    EpsilonValue::Zero
                };
                (i, v)
            });
            out.push(BadLabel::new(partition.clone(), family, choices)?);
        }
        Ok(out)
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn epsilon(&self) -> &EpsilonFunction {
        &self.epsilon
    }

    pub fn family(&self) -> EpsilonFamily {
        self.epsilon.family
    }

    /// `ε(i)` for any `i ≥ 0`.
    pub fn value(&self, i: u32) -> EpsilonValue {
        self.epsilon
            .family
            .forced(&self.partition, i)
            .unwrap_or_else(|| self.epsilon.assignments[&i])
    }

    pub fn is_max(&self) -> bool {
        self.epsilon
            .assignments
            .values()
            .all(|&v| v == EpsilonValue::One)
    }

    /// `true` when `α*_1` (the number of parts) is even.
    pub fn in_even_component(&self) -> bool {
        self.partition.len().is_multiple_of(2)
    }

    /// All parts even with even multiplicity and every ε value 0.
    pub fn is_split(&self) -> bool {
        !self.partition.is_empty()
            && self.partition.parts().iter().all(|&p| {
                p % 2 == 0 && self.partition.multiplicity(p).is_multiple_of(2)
            })
            && self
                .epsilon
                .assignments
                .values()
                .all(|&v| v == EpsilonValue::Zero)
    }
}

impl fmt::Display for BadLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},", self.partition)?;
        let free: Vec<(u32, EpsilonValue)> = self
            .epsilon
            .assignments
            .iter()
            .rev()
            .map(|(&i, &v)| (i, v))
            .collect();
        if free.is_empty() {
            f.write_str("*")?;
        } else if free.iter().all(|&(_, v)| v == free[0].1) {
            for (i, _) in &free {
                write!(f, "ε({i})=")?;
            }
            write!(f, "{}", free[0].1)?;
        } else {
            let parts: Vec<String> = free.iter().map(|(i, v)| format!("ε({i})={v}")).collect();
            f.write_str(&parts.join(","))?;
        }
        f.write_str(")")
    }
}

/// `(α, ε) ≤ (β, δ)`:
///
/// 1. `α ≤ β` in the dominance order;
/// 2. for all `k ≥ 1`: `Σ_{i≤k} β*_i - max(δ(k),0) ≤ Σ_{i≤k} α*_i - max(ε(k),0)`;
/// 3. for all `k ≥ 1`: if the two prefix sums of 2 agree and
///    `α*_{k+1} - β*_{k+1}` is odd, then `δ(k) ≠ 0`.
///
/// Labels of orthogonal type must lie in the same component.
pub fn bad_leq(a: &BadLabel, b: &BadLabel) -> Result<bool> {
    if a.family() != b.family() {
        return Err(Error::LabelMismatch(format!(
            "{a} and {b} belong to different families"
        )));
    }
    if a.family() == EpsilonFamily::MinusOne(FormKind::Orthogonal)
        && a.in_even_component() != b.in_even_component()
    {
        return Err(Error::ComponentMismatch);
    }
    if !a.partition.dominance_leq(&b.partition)? {
        return Ok(false);
    }
    let (at, bt) = (a.partition.transpose(), b.partition.transpose());
    let top = a.partition.largest().max(b.partition.largest()) as usize + 1;
    for k in 1..=top {
        let sa = at.prefix_sum(k) as i64;
        let sb = bt.prefix_sum(k) as i64;
        let (ek, dk) = (a.value(k as u32), b.value(k as u32));
        if sb - dk.positive_part() > sa - ek.positive_part() {
            return Ok(false);
        }
        let diff = at.part(k + 1) as i64 - bt.part(k + 1) as i64;
        if sa == sb && diff % 2 != 0 && dk == EpsilonValue::Zero {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classical groups whose unipotent classes are parametrized here. The
/// field is the rank `n`: `GL(n)`, `GL†(n)`, `SO(2n+1)`, `Sp(2n)`, `O(2n)`,
/// `SO(2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    Gl(u32),
    GlDagger(u32),
    OddOrthogonal(u32),
    Symplectic(u32),
    EvenOrthogonal(u32),
    SpecialEvenOrthogonal(u32),
}

impl Group {
    pub fn rank(self) -> u32 {
        match self {
            Group::Gl(n)
            | Group::GlDagger(n)
            | Group::OddOrthogonal(n)
            | Group::Symplectic(n)
            | Group::EvenOrthogonal(n)
            | Group::SpecialEvenOrthogonal(n) => n,
        }
    }

    /// Dimension of the natural representation.
    pub fn dimension(self) -> u32 {
        match self {
            Group::Gl(n) | Group::GlDagger(n) => n,
            Group::OddOrthogonal(n) => 2 * n + 1,
            Group::Symplectic(n) | Group::EvenOrthogonal(n) | Group::SpecialEvenOrthogonal(n) => {
                2 * n
            }
        }
    }

    fn short_name(self) -> &'static str {
        match self {
            Group::Gl(_) => "GL",
            Group::GlDagger(_) => "GLd",
            Group::OddOrthogonal(_) => "SO_odd",
            Group::Symplectic(_) => "Sp",
            Group::EvenOrthogonal(_) => "O",
            Group::SpecialEvenOrthogonal(_) => "SO",
        }
    }

    fn good_family(self) -> PartitionFamily {
        let d = self.dimension();
        match self {
            Group::Gl(_) | Group::GlDagger(_) => PartitionFamily::All(d),
            Group::Symplectic(_) => PartitionFamily::Kappa(d, Kappa::Minus),
            _ => PartitionFamily::Kappa(d, Kappa::Plus),
        }
    }

    /// The ε-family of characteristic-2 labels. For `GL†` these live in
    /// the non-identity component. `SO(2n+1)` shares the parameters of
    /// `Sp(2n)`.
    pub fn bad_family(self) -> Option<EpsilonFamily> {
        match self {
            Group::Gl(_) => None,
            Group::GlDagger(_) => Some(EpsilonFamily::PlusOne),
            Group::OddOrthogonal(_) | Group::Symplectic(_) => {
                Some(EpsilonFamily::MinusOne(FormKind::Symplectic))
            }
            Group::EvenOrthogonal(_) | Group::SpecialEvenOrthogonal(_) => {
                Some(EpsilonFamily::MinusOne(FormKind::Orthogonal))
            }
        }
    }

    fn bad_total(self) -> u32 {
        match self {
            Group::OddOrthogonal(n) => 2 * n,
            g => g.dimension(),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Group::Gl(n) => write!(f, "GL({n})"),
            Group::GlDagger(n) => write!(f, "GL†({n})"),
            Group::OddOrthogonal(n) => write!(f, "SO({})", 2 * n + 1),
            Group::Symplectic(n) => write!(f, "Sp({})", 2 * n),
            Group::EvenOrthogonal(n) => write!(f, "O({})", 2 * n),
            Group::SpecialEvenOrthogonal(n) => write!(f, "SO({})", 2 * n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    Good(Partition),
    Bad(BadLabel),
}

/// Whether an `O(2n)` class lies in `SO(2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SoComponent {
    Inside,
    Outside,
}

/// The two `SO(2n)`-classes into which some `O(2n)`-classes split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Split {
    I,
    II,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct UnipotentLabel {
    pub group: Group,
    pub variant: Variant,
    pub so_component: Option<SoComponent>,
    pub split: Option<Split>,
}

impl UnipotentLabel {
    pub fn good(group: Group, partition: Partition) -> Result<Self> {
        if !group.good_family().contains(&partition) {
            return Err(Error::InvalidForFamily {
                partition,
                family: format!("{group}"),
            });
        }
        Ok(UnipotentLabel {
            group,
            variant: Variant::Good(partition),
            so_component: None,
            split: None,
        })
    }

    pub fn bad(group: Group, label: BadLabel) -> Result<Self> {
        let family = group
            .bad_family()
            .ok_or_else(|| Error::NoUnipotents(format!("{group} twisted component")))?;
        if label.family() != family || label.partition().total() != group.bad_total() {
            return Err(Error::InvalidForFamily {
                partition: label.partition().clone(),
                family: format!("{group}"),
            });
        }
        let so_component = match group {
            Group::EvenOrthogonal(_) | Group::SpecialEvenOrthogonal(_) => {
                Some(if label.in_even_component() {
                    SoComponent::Inside
                } else {
                    SoComponent::Outside
                })
            }
            _ => None,
        };
        if matches!(group, Group::SpecialEvenOrthogonal(_))
            && so_component != Some(SoComponent::Inside)
        {
            return Err(Error::InvalidForFamily {
                partition: label.partition().clone(),
                family: format!("{group}"),
            });
        }
        Ok(UnipotentLabel {
            group,
            variant: Variant::Bad(label),
            so_component,
            split: None,
        })
    }

    pub fn with_split(mut self, split: Split) -> Self {
        self.split = Some(split);
        self
    }

    pub fn partition(&self) -> &Partition {
        match &self.variant {
            Variant::Good(p) => p,
            Variant::Bad(b) => b.partition(),
        }
    }

    /// `{"partition":[4,4],"epsilon":{"4":1},"family":"minus_one","group":"O","component":"SO"}`;
    /// good labels omit the ε data.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("partition".into(), serde_json::json!(self.partition().parts()));
        if let Variant::Bad(b) = &self.variant {
            let eps: serde_json::Map<String, serde_json::Value> = b
                .epsilon()
                .assignments()
                .iter()
                .rev()
                .map(|(i, v)| {
                    let n = i32::from(*v == EpsilonValue::One);
                    (i.to_string(), serde_json::json!(n))
                })
                .collect();
            m.insert("epsilon".into(), serde_json::Value::Object(eps));
            let fam = match b.family() {
                EpsilonFamily::MinusOne(_) => "minus_one",
                EpsilonFamily::PlusOne => "plus_one",
            };
            m.insert("family".into(), fam.into());
        }
        m.insert("group".into(), self.group.short_name().into());
        m.insert("n".into(), self.group.rank().into());
        if let Some(c) = self.so_component {
            let s = match c {
                SoComponent::Inside => "SO",
                SoComponent::Outside => "nonSO",
            };
            m.insert("component".into(), s.into());
        }
        if let Some(s) = self.split {
            m.insert("split".into(), format!("{s:?}").into());
        }
        serde_json::Value::Object(m)
    }
}

impl fmt::Display for UnipotentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.variant {
            Variant::Good(p) => write!(f, "{p}")?,
            Variant::Bad(b) => write!(f, "{b}")?,
        }
        if let Some(s) = self.split {
            write!(f, "_{s:?}")?;
        }
        Ok(())
    }
}

/// `U_α ⪯ U_β` in good characteristic: dominance of the partitions.
pub fn good_leq(a: &UnipotentLabel, b: &UnipotentLabel) -> Result<bool> {
    if a.group != b.group {
        return Err(Error::LabelMismatch(format!(
            "{a} in {} vs {b} in {}",
            a.group, b.group
        )));
    }
    match (&a.variant, &b.variant) {
        (Variant::Good(x), Variant::Good(y)) => x.dominance_leq(y),
        _ => Err(Error::LabelMismatch(format!(
            "{a} and {b} are not both good-characteristic labels"
        ))),
    }
}

/// Closure order on labels of one group, dispatching on the variant.
/// Split markers are ignored.
pub fn unipotent_leq(a: &UnipotentLabel, b: &UnipotentLabel) -> Result<bool> {
    if a.group != b.group {
        return Err(Error::LabelMismatch(format!(
            "{a} in {} vs {b} in {}",
            a.group, b.group
        )));
    }
    match (&a.variant, &b.variant) {
        (Variant::Good(_), Variant::Good(_)) => good_leq(a, b),
        (Variant::Bad(x), Variant::Bad(y)) => bad_leq(x, y),
        _ => Err(Error::ComponentMismatch),
    }
}

/// Root system type on the good-characteristic side of `θ₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalType {
    B,
    C,
    D,
}

/// `θ₂` on labels `(α, ε_max)` with all parts of `α` even.
///
/// Type C returns `α`; types B and D return `α + ψ_α`, and type B appends a
/// part 1 when `α` has an even number of parts. Type D needs an even number
/// of parts.
pub fn theta2(label: &BadLabel, ty: ClassicalType) -> Result<Partition> {
    if !label.is_max() {
        return Err(Error::InvalidEpsilon(format!("{label} is not ε_max")));
    }
    let alpha = label.partition();
    if !alpha.all_even() {
        return Err(Error::OddPart(alpha.clone()));
    }
    match ty {
        ClassicalType::C => Ok(alpha.clone()),
        ClassicalType::D => {
            if alpha.len() % 2 == 1 {
                return Err(Error::InvalidForFamily {
                    partition: alpha.clone(),
                    family: "type D (even number of parts)".into(),
                });
            }
            alpha.add_psi()
        }
        ClassicalType::B => {
            let g = alpha.add_psi()?;
            Ok(if alpha.len().is_multiple_of(2) { g.append_one() } else { g })
        }
    }
}

/// `α + ψ_α` computed on the transpose: with `i` running over
/// `1..=α_1+1`,
///
/// * `δ*_i = α*_i + 1` if `i` is odd, `α*_i` is even and `m_α(i-1) > 0`;
/// * `δ*_i = α*_i - 1` if `i` is even, `α*_i` is even and `m_α(i) > 0`;
/// * `δ*_i = α*_i` otherwise.
///
/// ```
/// use elliptic_order::unipotent::theta2_column_recipe;
/// let d = theta2_column_recipe(&"[6,6,4,2]".parse().unwrap()).unwrap();
/// assert_eq!(d.transpose().to_string(), "[4,3,3,3,3,1,1]");
/// assert_eq!(d.to_string(), "[7,5,5,1]");
/// ```
pub fn theta2_column_recipe(alpha: &Partition) -> Result<Partition> {
    if !alpha.all_even() {
        return Err(Error::OddPart(alpha.clone()));
    }
    let at = alpha.transpose();
    let top = alpha.largest() as usize + 1;
    let mut cols = Vec::with_capacity(top);
    for i in 1..=top {
        let c = at.part(i);
        let v = if i % 2 == 1 && c.is_multiple_of(2) && alpha.multiplicity(i as u32 - 1) > 0 {
            c + 1
        } else if i % 2 == 0 && c.is_multiple_of(2) && alpha.multiplicity(i as u32) > 0 {
            c - 1
        } else {
            c
        };
        cols.push(v);
    }
    let delta_t = Partition::new(cols)
        .map_err(|e| Error::InvalidPartition(format!("column recipe on {alpha}: {e}")))?;
    Ok(delta_t.transpose())
}

/// All unipotent class labels of `group` in the given characteristic.
///
/// `O(2n)` labels carry their `SO(2n)` component. `SO(2n)` lists each
/// splitting class twice, marked `I` and `II`. `GL†` in characteristic 2
/// lists the identity-component classes followed by the other component.
pub fn enumerate_unipotent(group: Group, p: Characteristic) -> Result<Vec<UnipotentLabel>> {
    let d = group.dimension();
    if d > DEFAULT_ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            n: d,
            bound: DEFAULT_ENUMERATION_BOUND,
        });
    }
    let mut out = Vec::new();
    let good_side = p == Characteristic::Good
        || matches!(group, Group::Gl(_) | Group::GlDagger(_));
    if good_side {
        for alpha in group.good_family().members()? {
            let very_even = !alpha.is_empty()
                && alpha
                    .parts()
                    .iter()
                    .all(|&x| x % 2 == 0 && alpha.multiplicity(x) % 2 == 0);
            let label = UnipotentLabel::good(group, alpha)?;
            if matches!(group, Group::SpecialEvenOrthogonal(_)) && very_even {
                out.push(label.clone().with_split(Split::I));
                out.push(label.with_split(Split::II));
            } else {
                out.push(label);
            }
        }
    }
    if p == Characteristic::Two {
        if let Some(family) = group.bad_family() {
            for alpha in family.partition_family(group.bad_total()).members()? {
                for b in BadLabel::all_for(&alpha, family)? {
                    if matches!(group, Group::SpecialEvenOrthogonal(_)) && !b.in_even_component() {
                        continue;
                    }
                    let split = b.is_split();
                    let label = UnipotentLabel::bad(group, b)?;
                    if matches!(group, Group::SpecialEvenOrthogonal(_)) && split {
                        out.push(label.clone().with_split(Split::I));
                        out.push(label.with_split(Split::II));
                    } else {
                        out.push(label);
                    }
                }
            }
        }
    }
    Ok(out)
}
