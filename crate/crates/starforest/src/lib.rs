//! Workbench for extremal problems on star forests in graphs and uniform
//! hypergraphs.
//!
//! The crate has five parts:
//!
//! * [`hypercore`] — the hypergraph data model: uniform and mixed-size
//!   hypergraphs, graphs, edge colorings, links, linearity, canonical forms
//!   and a plain-text serialization format.
//! * [`constructions`] — the extremal and lower-bound constructions
//!   (lattice hypergraphs, Cartesian products, apex joins, clique unions,
//!   circular regular hypergraphs), each returning a labeled hypergraph
//!   whose edge count is predicted exactly.
//! * [`detect`] — certificate-producing detectors for the forbidden
//!   configurations: systems of distinct representatives, Berge stars and
//!   star forests, expansion stars and star forests, and matchings.
//! * [`formulas`] — exact rational evaluation of every closed-form bound,
//!   with parameter-regime dispatch.
//! * [`oracle`] — exact desk-scale Turán searches over all (optionally
//!   linear) hypergraphs avoiding a forbidden family, with isomorph-free
//!   enumeration of the extremal examples.

pub mod constructions;
pub mod detect;
pub mod formulas;
pub mod hypercore;
pub mod oracle;

pub use formulas::Rational;
pub use hypercore::{Graph, Hypergraph, MultiHypergraph};
