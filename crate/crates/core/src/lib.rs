pub mod arith;
pub mod atlas;
pub mod classifier;
pub mod groups;
