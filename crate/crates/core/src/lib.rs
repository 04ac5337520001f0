pub mod error;
pub mod fwht;
