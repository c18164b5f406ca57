pub mod char_rings;
pub mod error;
pub mod evaluate;
pub mod lr;
pub mod partition;
pub mod schur_ring;
pub mod series;
pub mod verify;
