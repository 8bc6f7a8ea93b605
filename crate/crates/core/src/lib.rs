pub mod blackhole;
pub mod cli;
pub mod correlations;
pub mod error;
pub mod oracle;
pub mod qcore;
