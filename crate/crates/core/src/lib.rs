pub mod bitset;
pub mod certificate;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hkqm;
pub mod polynomial;
pub mod rational;
pub mod rollercoaster;
pub mod subsets;
