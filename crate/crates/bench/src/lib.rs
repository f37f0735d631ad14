//! Workloads shared by the benchmarks.

use mbe_core::ncalgebra::{GenSymbol, NCPoly, Word};

/// Sum of every word of length `len` over `letters`, each with coefficient 1.
pub fn all_words(letters: &[GenSymbol], len: usize) -> NCPoly {
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w: Vec<GenSymbol>| {
                letters.iter().map(move |&g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
    }
    let mut out = NCPoly::zero();
    for w in words {
        out = &out + &NCPoly::word(Word(w));
    }
    out
}
