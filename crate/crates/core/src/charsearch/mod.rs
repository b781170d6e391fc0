//! Order-`p` multiplicative characters on finite fields, character sums, and
//! the triangle and induced-subgraph searches built on them.

mod character;
mod embed;
mod k3;

pub use character::{
    character_sum, integer_value, selector, weil_sweep, CharSum, CharValue, CharacterTable,
    Selector, WeilRow,
};
pub use embed::{bipartite_char2_sweep, embed_induced_subgraph, embed_sweep, BipartiteRow, EmbeddingWitness};
pub use k3::{count_k3_witnesses, find_k3, K3Count, K3Hit};
