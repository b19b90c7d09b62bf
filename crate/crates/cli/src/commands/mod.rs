pub mod boundary;
pub mod index;
pub mod profile;
pub mod search;
