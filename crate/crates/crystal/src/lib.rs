//! Crystal and queer-crystal structures on Young and shifted tableaux.

pub mod axioms;
pub mod graph;
pub mod poly;
pub mod queer;
pub mod shifted;
pub mod symfunc;
pub mod tableau;
pub mod word;
pub mod young;
