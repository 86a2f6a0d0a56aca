//! Subdivided-K5 certificates for 5-connected apex graphs.

pub mod graph;
pub mod hammock;
pub mod planar;
pub mod discharging;
pub mod linkage;
pub mod oracle;
pub mod pipeline;
pub mod generate;
pub mod cli;
