//! Elliptic conjugacy classes of classical Weyl groups, their Bruhat-induced
//! partial order, and the correspondence with unipotent classes.

pub mod error;
pub mod partitions;
pub mod weyl;
pub mod classposet;
pub mod unipotent;
pub mod lusztig;

pub use error::{Error, Result};
pub use partitions::Partition;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/weyl-groups.md")]
    mod weyl_groups {}
    #[doc = include_str!("../../../book/src/elliptic-classes.md")]
    mod elliptic_classes {}
    #[doc = include_str!("../../../book/src/unipotent.md")]
    mod unipotent {}
    #[doc = include_str!("../../../book/src/correspondence.md")]
    mod correspondence {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
