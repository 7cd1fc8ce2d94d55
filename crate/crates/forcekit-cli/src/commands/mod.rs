pub mod analyze;
pub mod build;
pub mod census;
pub mod export_dot;
pub mod verify;
