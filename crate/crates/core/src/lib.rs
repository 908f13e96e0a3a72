pub mod acceptance;
pub mod cli;
pub mod covercat;
pub mod exactnum;
pub mod geometry;
pub mod measures;
pub mod random;
pub mod trace;
