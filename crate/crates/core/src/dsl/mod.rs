//! The ring-definition language: parsing, canonical printing, building.
//!
//! ```text
//! expr := ctor "(" args ")"
//! ctor := Z | M | U | D | V | H | K | prod | dorroh | quot | corner | twist | trs | algebra | sub
//! elem := int | "#" int | "[" row ("," row)* "]" | "(" elem ("," elem)+ ")"
//! row  := "[" elem ("," elem)* "]"
//! hom  := "id" | "{" elem "->" elem ("," elem "->" elem)* "}"
//! gens := "sub" "[" [elem ("," elem)*] "]"
//! ```

#[cfg(feature = "proptest")]
pub mod arbitrary;
mod ast;
mod build;
mod parse;

pub use ast::{ElemLit, Expr, HomSpec};
pub(crate) use build::endomorphism;
pub use build::{build, resolve};
pub use parse::{parse, parse_element, ParseError};
