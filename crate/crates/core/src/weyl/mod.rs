//! Classical Weyl groups realized as (signed) permutations.

mod bruhat;
mod classes;
mod enumerate;
mod ineq;
mod perm;
mod reps;
mod roots;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bruhat::{bruhat_leq_counts, bruhat_leq_generic, count_matrix, count_witness, CountMatrix};
pub use classes::{class_label, cycle_type, signed_cycle_type, EllipticClassLabel};
pub use enumerate::{
    enumerate_class, enumerate_group, group_order, min_length_elements, DEFAULT_GROUP_CAP,
};
pub use ineq::{bc_inequality, cover_index, twisted_a_inequality};
pub use perm::{SignedPermutation, MAX_RANK};
pub use reps::{rep_2a, rep_a, rep_bc, rep_d, representative};
pub use roots::{length, s_interval, simple_reflection, simple_reflection_count};

/// Root system family of a Weyl group context.
///
/// For `A` and `TwistedA` the rank field counts letters: `A` with rank `n`
/// is the symmetric group `S_n` (a Weyl group of type `A_{n-1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    BC,
    D,
    TwistedA,
    O2n,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::BC => "BC",
            Family::D => "D",
            Family::TwistedA => "2A",
            Family::O2n => "O2n",
        }
    }

    /// Whether elements carry signs.
    pub fn is_signed(self) -> bool {
        matches!(self, Family::BC | Family::D | Family::O2n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Family::A),
            "BC" | "B" | "C" => Ok(Family::BC),
            "D" => Ok(Family::D),
            "2A" | "TwistedA" => Ok(Family::TwistedA),
            "O2n" => Ok(Family::O2n),
            _ => Err(Error::UnsupportedFamily(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Identity,
    Twisted,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Identity => "id",
            Component::Twisted => "twisted",
        })
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" | "identity" | "0" => Ok(Component::Identity),
            "twisted" | "1" => Ok(Component::Twisted),
            _ => Err(Error::Parse(format!("unknown component {s:?}"))),
        }
    }
}

/// Which group (or coset) elements are taken from.
///
/// * `A(n)`: `S_n`, identity component only.
/// * `BC(n)`: all signed permutations.
/// * `D(n)`: the index-two subgroup with an even number of sign changes
///   (`Identity`), or its other coset `W⁰δ` with `δ = [-1,2,…,n]` (`Twisted`).
/// * `TwistedA(n)`: the coset `S_n·δ` with `δ` the longest element. An element
///   `wδ` is stored as the plain permutation `w`.
/// * `O2n(n)`: all signed permutations, with lengths and reflections taken
///   from `D(n)`; the component of an element is its sign-change parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupContext {
    pub family: Family,
    pub rank: usize,
    pub component: Component,
}

impl GroupContext {
    pub fn new(family: Family, rank: usize, component: Component) -> Result<Self> {
        let min = match family {
            Family::D | Family::O2n => 2,
            _ => 1,
        };
        if rank < min || rank > MAX_RANK {
            return Err(Error::UnsupportedRank {
                rank,
                min,
                max: MAX_RANK,
            });
        }
        let component = match family {
            Family::A | Family::BC | Family::O2n => {
                if component == Component::Twisted && family != Family::O2n {
                    return Err(Error::ContextMismatch(format!(
                        "{family} has no twisted component"
                    )));
                }
                component
            }
            Family::TwistedA => Component::Twisted,
            Family::D => component,
        };
        Ok(GroupContext {
            family,
            rank,
            component,
        })
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(Family::A, n, Component::Identity)
    }

    pub fn bc(n: usize) -> Result<Self> {
        Self::new(Family::BC, n, Component::Identity)
    }

    pub fn d(n: usize, component: Component) -> Result<Self> {
        Self::new(Family::D, n, component)
    }

    pub fn twisted_a(n: usize) -> Result<Self> {
        Self::new(Family::TwistedA, n, Component::Twisted)
    }

    pub fn o2n(n: usize) -> Result<Self> {
        Self::new(Family::O2n, n, Component::Identity)
    }

    /// Whether `w` is an element of this context's group or coset.
    pub fn contains(&self, w: &SignedPermutation) -> bool {
        if w.rank() != self.rank {
            return false;
        }
        match self.family {
            Family::A | Family::TwistedA => w.is_unsigned(),
            Family::BC | Family::O2n => true,
            Family::D => {
                let odd = w.negative_count() % 2 == 1;
                odd == (self.component == Component::Twisted)
            }
        }
    }

    pub(crate) fn check(&self, w: &SignedPermutation) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotInGroup {
                element: w.to_string(),
                context: self.to_string(),
            })
        }
    }

    /// The length-zero element of the twisted coset.
    ///
    /// For `D`/`O2n` this is `[-1,2,…,n]`. For `TwistedA` it is the longest
    /// element of `S_n`, whose stored form is the identity.
    pub fn delta(&self) -> SignedPermutation {
        match self.family {
            Family::D | Family::O2n => {
                let mut images: Vec<i32> = (1..=self.rank as i32).collect();
                images[0] = -1;
                SignedPermutation::from_images(&images).expect("valid delta")
            }
            _ => SignedPermutation::reversal(self.rank),
        }
    }

    /// Component (coset) of an element. For `O2n` it is read off the
    /// sign-change parity; other families have a fixed component.
    pub fn component_of(&self, w: &SignedPermutation) -> Component {
        match self.family {
            Family::D | Family::O2n => {
                if w.negative_count() % 2 == 1 {
                    Component::Twisted
                } else {
                    Component::Identity
                }
            }
            _ => self.component,
        }
    }

    /// Parses an element in window notation. A trailing `*d` marks a twisted
    /// element; it is required for `TwistedA` and must agree with the
    /// sign-change parity in `D`.
    pub fn parse_element(&self, s: &str) -> Result<SignedPermutation> {
        let t = s.trim();
        let (body, twisted) = match t.strip_suffix("*d") {
            Some(b) => (b, true),
            None => (t, false),
        };
        let w: SignedPermutation = body.parse()?;
        match self.family {
            Family::TwistedA => {
                if !twisted {
                    return Err(Error::Parse(format!(
                        "{s:?}: twisted elements need the *d suffix"
                    )));
                }
            }
            Family::D | Family::O2n => {
                if twisted && w.negative_count().is_multiple_of(2) {
                    return Err(Error::Parse(format!(
                        "{s:?}: *d marks an odd number of sign changes"
                    )));
                }
            }
            Family::A | Family::BC => {
                if twisted {
                    return Err(Error::Parse(format!("{s:?}: no twisted component")));
                }
            }
        }
        self.check(&w)?;
        Ok(w)
    }

    /// Inverse of [`parse_element`](Self::parse_element).
    pub fn format_element(&self, w: &SignedPermutation) -> String {
        if self.component_of(w) == Component::Twisted {
            format!("{w}*d")
        } else {
            w.to_string()
        }
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.component) {
            (Family::D, Component::Twisted) => write!(f, "D({})·δ", self.rank),
            (Family::TwistedA, _) => write!(f, "2A({})", self.rank),
            (fam, _) => write!(f, "{}({})", fam, self.rank),
        }
    }
}
