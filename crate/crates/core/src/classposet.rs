//! The partial order `⪯_W` on elliptic conjugacy classes, obtained from the
//! Bruhat order on minimal-length elements, and Hasse diagrams.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::bruhat_leq_generic;
use crate::weyl::{
    class_label, enumerate_class, enumerate_group, length, representative, Component,
    GroupContext, SignedPermutation,
};

pub use crate::weyl::EllipticClassLabel;

/// Whether two labels may be compared: same family, rank and component.
fn check_comparable(a: &EllipticClassLabel, b: &EllipticClassLabel) -> Result<()> {
    let (x, y) = (a.ctx(), b.ctx());
    if x.family != y.family || x.rank != y.rank {
        return Err(Error::ContextMismatch(format!("{a} in {x} vs {b} in {y}")));
    }
    if x.component != y.component {
        return Err(Error::ComponentMismatch);
    }
    Ok(())
}

/// `a ⪯_W b`: some element of class `a` lies below the closed-form
/// minimal-length representative of `b` in the Bruhat order.
///
/// ```
/// use elliptic_order::classposet::{class_leq_w, EllipticClassLabel};
/// use elliptic_order::weyl::{GroupContext, DEFAULT_GROUP_CAP};
/// let bc2 = GroupContext::bc(2).unwrap();
/// let c2 = EllipticClassLabel::new(bc2, "[2]".parse().unwrap()).unwrap();
/// let c11 = EllipticClassLabel::new(bc2, "[1,1]".parse().unwrap()).unwrap();
/// assert!(class_leq_w(&c2, &c11, DEFAULT_GROUP_CAP).unwrap());
/// assert!(!class_leq_w(&c11, &c2, DEFAULT_GROUP_CAP).unwrap());
/// ```
pub fn class_leq_w(a: &EllipticClassLabel, b: &EllipticClassLabel, cap: u128) -> Result<bool> {
    check_comparable(a, b)?;
    let ctx = b.ctx();
    let w = representative(b)?;
    let class_a = enumerate_class(ctx, a, cap)?;
    below_any(ctx, &class_a, &w)
}

fn below_any(ctx: &GroupContext, xs: &[SignedPermutation], w: &SignedPermutation) -> Result<bool> {
    let lw = length(ctx, w)?;
    for x in xs {
        if length(ctx, x)? <= lw && bruhat_leq_generic(ctx, x, w)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The four equivalent formulations of `a ⪯_W b`, evaluated separately.
/// With `C = b`, `C' = a`:
///
/// 1. some `w ∈ C_min` has some `w' ∈ C'_min` below it;
/// 2. every `w ∈ C_min` has some `w' ∈ C'_min` below it;
/// 3. some `w ∈ C_min` has some `w' ∈ C'` below it;
/// 4. every `w ∈ C_min` has some `w' ∈ C'` below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionRecord {
    pub some_min_min: bool,
    pub every_min_min: bool,
    pub some_min_any: bool,
    pub every_min_any: bool,
}

impl ConditionRecord {
    pub fn all_agree(&self) -> bool {
        let v = self.some_min_min;
        self.every_min_min == v && self.some_min_any == v && self.every_min_any == v
    }
}

/// Evaluates all four conditions by brute force.
pub fn class_leq_w_all_variants(
    a: &EllipticClassLabel,
    b: &EllipticClassLabel,
    cap: u128,
) -> Result<ConditionRecord> {
    check_comparable(a, b)?;
    ClassCatalog::build(a.ctx(), cap)?.conditions(a, b)
}

/// The order predicted from the partitions: `C_α ⪯_W C_β` iff `β ≤ α` in
/// the dominance order.
pub fn predicted_leq_w(a: &EllipticClassLabel, b: &EllipticClassLabel) -> Result<bool> {
    check_comparable(a, b)?;
    b.partition().dominance_leq(a.partition())
}

struct ClassData {
    elements: Vec<SignedPermutation>,
    min: Vec<SignedPermutation>,
    min_length: usize,
}

/// All elliptic classes of a context, enumerated once and bucketed.
pub struct ClassCatalog {
    ctx: GroupContext,
    labels: Vec<EllipticClassLabel>,
    classes: HashMap<EllipticClassLabel, ClassData>,
}

impl ClassCatalog {
    pub fn build(ctx: &GroupContext, cap: u128) -> Result<Self> {
        let labels = EllipticClassLabel::all(ctx)?;
        let mut buckets: HashMap<EllipticClassLabel, Vec<SignedPermutation>> =
            labels.iter().map(|l| (l.clone(), Vec::new())).collect();
        for w in enumerate_group(ctx, cap)? {
            if let Some(l) = class_label(ctx, &w) {
                buckets.get_mut(&l).expect("label enumerated").push(w);
            }
        }
        let mut classes = HashMap::new();
        for (label, elements) in buckets {
            let lengths: Vec<usize> = elements
                .iter()
                .map(|w| length(ctx, w))
                .collect::<Result<_>>()?;
            let min_length = *lengths.iter().min().ok_or_else(|| {
                Error::PosetViolation(format!("class {label} is empty"))
            })?;
            let min = elements
                .iter()
                .zip(&lengths)
                .filter(|(_, &l)| l == min_length)
                .map(|(w, _)| *w)
                .collect();
            classes.insert(
                label,
                ClassData {
                    elements,
                    min,
                    min_length,
                },
            );
        }
        Ok(ClassCatalog {
            ctx: *ctx,
            labels,
            classes,
        })
    }

    pub fn ctx(&self) -> &GroupContext {
        &self.ctx
    }

    /// Labels in reverse-lexicographic order of partitions.
    pub fn labels(&self) -> &[EllipticClassLabel] {
        &self.labels
    }

    fn data(&self, label: &EllipticClassLabel) -> Result<&ClassData> {
        self.classes.get(label).ok_or_else(|| {
            Error::ContextMismatch(format!("{label} is not a class of {}", self.ctx))
        })
    }

    pub fn elements(&self, label: &EllipticClassLabel) -> Result<&[SignedPermutation]> {
        Ok(&self.data(label)?.elements)
    }

    pub fn min_elements(&self, label: &EllipticClassLabel) -> Result<&[SignedPermutation]> {
        Ok(&self.data(label)?.min)
    }

    pub fn min_length(&self, label: &EllipticClassLabel) -> Result<usize> {
        Ok(self.data(label)?.min_length)
    }

    /// `a ⪯_W b` using the closed-form representative of `b`.
    pub fn leq(&self, a: &EllipticClassLabel, b: &EllipticClassLabel) -> Result<bool> {
        check_comparable(a, b)?;
        let w = representative(b)?;
        below_any(&self.ctx, self.elements(a)?, &w)
    }

    pub fn conditions(
        &self,
        a: &EllipticClassLabel,
        b: &EllipticClassLabel,
    ) -> Result<ConditionRecord> {
        check_comparable(a, b)?;
        let c_min = self.min_elements(b)?;
        let a_min = self.min_elements(a)?;
        let a_all = self.elements(a)?;
        let over_min = c_min
            .iter()
            .map(|w| below_any(&self.ctx, a_min, w))
            .collect::<Result<Vec<_>>>()?;
        let over_all = c_min
            .iter()
            .map(|w| below_any(&self.ctx, a_all, w))
            .collect::<Result<Vec<_>>>()?;
        Ok(ConditionRecord {
            some_min_min: over_min.iter().any(|&v| v),
            every_min_min: over_min.iter().all(|&v| v),
            some_min_any: over_all.iter().any(|&v| v),
            every_min_any: over_all.iter().all(|&v| v),
        })
    }

    /// The full relation matrix, computed in parallel. Classes from
    /// different components are incomparable.
    pub fn poset(&self) -> Result<WeylPoset> {
        let m = self.labels.len();
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
        let verdicts = pairs
            .par_iter()
            .map(|&(i, j)| {
                let (a, b) = (&self.labels[i], &self.labels[j]);
                if a.component() != b.component() {
                    Ok(false)
                } else {
                    self.leq(a, b)
                }
            })
            .collect::<Result<Vec<bool>>>()?;
        let leq = verdicts.chunks(m.max(1)).map(|c| c.to_vec()).collect();
        Ok(WeylPoset {
            labels: self.labels.clone(),
            leq,
        })
    }
}

/// `⪯_W` as an explicit relation matrix: `leq[i][j]` is `labels[i] ⪯_W labels[j]`.
#[derive(Clone, Debug, Serialize)]
pub struct WeylPoset {
    pub labels: Vec<EllipticClassLabel>,
    pub leq: Vec<Vec<bool>>,
}

impl WeylPoset {
    pub fn hasse(&self) -> Result<HasseDiagram> {
        hasse(
            self.labels.iter().map(|l| l.to_string()).collect(),
            |i, j| self.leq[i][j],
        )
    }

    /// Only the labels of one component.
    pub fn restrict(&self, component: Component) -> WeylPoset {
        let keep: Vec<usize> = (0..self.labels.len())
            .filter(|&i| self.labels[i].component() == component)
            .collect();
        WeylPoset {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            leq: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.leq[i][j]).collect())
                .collect(),
        }
    }
}

/// Covering relation of a finite poset; `covers` holds `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub nodes: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

/// Builds the Hasse diagram of `leq` on `nodes`, checking that `leq` is
/// reflexive, antisymmetric and transitive.
///
/// ```
/// use elliptic_order::classposet::hasse;
/// let nodes = vec!["a".to_string(), "b".to_string(), "c".to_string()];
/// let h = hasse(nodes, |i, j| i <= j).unwrap();
/// assert_eq!(h.covers, vec![(0, 1), (1, 2)]);
/// ```
pub fn hasse<F>(nodes: Vec<String>, leq: F) -> Result<HasseDiagram>
where
    F: Fn(usize, usize) -> bool,
{
    let m = nodes.len();
    let rel: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| leq(i, j)).collect()).collect();
    for i in 0..m {
        if !rel[i][i] {
            return Err(Error::PosetViolation(format!("{} is not ≤ itself", nodes[i])));
        }
        for j in 0..m {
            if i != j && rel[i][j] && rel[j][i] {
                return Err(Error::PosetViolation(format!(
                    "{} ≤ {} and {} ≤ {}",
                    nodes[i], nodes[j], nodes[j], nodes[i]
                )));
            }
            if !rel[i][j] {
                continue;
            }
            for k in 0..m {
                if rel[j][k] && !rel[i][k] {
                    return Err(Error::PosetViolation(format!(
                        "{} ≤ {} ≤ {} but not {} ≤ {}",
                        nodes[i], nodes[j], nodes[k], nodes[i], nodes[k]
                    )));
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !rel[i][j] {
                continue;
            }
            let between = (0..m).any(|k| k != i && k != j && rel[i][k] && rel[k][j]);
            if !between {
                covers.push((i, j));
            }
        }
    }
    Ok(HasseDiagram { nodes, covers })
}

impl HasseDiagram {
    /// Graphviz source, drawn bottom to top.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", escape(name));
        let _ = writeln!(s, "  rankdir=BT;");
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", escape(n));
        }
        for (lo, hi) in &self.covers {
            let _ = writeln!(s, "  n{lo} -> n{hi};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes,
            "covers": self.covers.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }

    /// Whether `other` has the same nodes (by position) with every cover
    /// reversed.
    pub fn is_opposite_of(&self, other: &HasseDiagram) -> bool {
        if self.nodes.len() != other.nodes.len() {
            return false;
        }
        let mut mine: Vec<(usize, usize)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        let mut theirs = other.covers.clone();
        mine.sort_unstable();
        theirs.sort_unstable();
        mine == theirs
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
