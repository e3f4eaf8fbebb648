//! Catalan triangle, G(d,1,n)-Dyck paths, fully commutative words, packets,
//! and a wreath-product model of G(d,1,n) used as an independent oracle.

mod catalan;
mod fc;
mod paths;
mod wreath;

pub use catalan::{catalan, catalan_entry, catalan_entry_closed, catalan_row, catalan_triangle_poly};
pub use fc::{
    fc_words, packet_decomposition, packet_size_formula, Collection, CollectionSummary, FcWord, Packet,
    PacketSummary,
};
pub use paths::{dyck_paths, monomial_to_path, passes_through, path_to_monomial, DyckPathG, Step};
pub use wreath::{
    canonical_words, group_oracle_check, word_to_element, wreath_mul, OracleReport, WreathElement,
    WreathGroup,
};
