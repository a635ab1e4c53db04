//! Covering numbers of finite groups.
//!
//! A cover of a group is a collection of proper subgroups whose union is the group; the
//! covering number is the least size of a cover. This crate computes covering numbers of
//! small permutation groups end to end and emits certificates that can be replayed:
//!
//! - [`perm`]: permutation arithmetic, explicit group tables, conjugacy classes and
//!   principal elements (generators of maximal cyclic subgroups).
//! - [`subgroups`]: maximal-subgroup classes, conjugate orbits and the incidence matrices.
//! - [`ilp`]: an exact solver for bounded covering integer programs.
//! - [`cover`]: covers, lower-bound programs and the covering-number pipeline.
//! - [`witt`]: PG(2,4), the Witt design S(3,6,22) and the McLaughlin graph.
//! - [`mcl`]: the McLaughlin-group certificate built from tabulated class data.
//! - [`cert`]: certificate files and their replay.

pub mod cert;
pub mod cover;
pub mod data;
pub mod files;
pub mod ilp;
pub mod mcl;
pub mod perm;
pub mod subgroups;
pub mod unitary;
pub mod witt;
