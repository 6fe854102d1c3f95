//! Fixture algebras shipped under `data/`.

use crate::io::AlgebraDocument;
use crate::lie::LieAlgebra;

macro_rules! fixtures {
    ($($name:ident),* $(,)?) => {
        /// Raw JSON of every fixture, by name.
        pub const SOURCES: &[(&str, &str)] = &[
            $((stringify!($name), include_str!(concat!("../data/", stringify!($name), ".json")))),*
        ];

        $(
            pub fn $name() -> LieAlgebra {
                load(include_str!(concat!("../data/", stringify!($name), ".json")))
            }
        )*
    };
}

fixtures!(
    sl2,
    sl3,
    gl2,
    borel2,
    heisenberg,
    sl2_ltimes_q2,
    sl2_plus_heisenberg,
    line,
    gl2_ltimes_q2,
    sl2_ltimes_heisenberg5,
    heisenberg_structure,
    sl2_plus_heisenberg_structure,
);

fn load(text: &str) -> LieAlgebra {
    AlgebraDocument::parse(text)
        .and_then(|d| d.to_algebra())
        .expect("bundled fixture is valid")
}

/// Every fixture with its name.
pub fn all() -> Vec<(&'static str, LieAlgebra)> {
    SOURCES.iter().map(|(name, text)| (*name, load(text))).collect()
}

/// Fixtures whose derived algebra is a proper subspace.
pub fn non_perfect() -> Vec<(&'static str, LieAlgebra)> {
    all()
        .into_iter()
        .filter(|(_, g)| g.derived_algebra().dim() < g.dim())
        .collect()
}
