//! Property tests spanning several modules.

mod ace;
mod analysis;
mod circuit;
mod noise;
mod simulate;
