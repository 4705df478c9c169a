pub mod cli;
pub mod cocycle;
pub mod coeff;
pub mod cover;
pub mod hecke_affine;
pub mod hecke_finite;
pub mod report;
pub mod symgroup;
pub mod verify;
