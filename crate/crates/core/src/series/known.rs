/// A generating series whose compositional inverse counts the free algebra
/// on one generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownSeries {
    pub name: &'static str,
    /// Series of the dual presentation, as an expression in `x`.
    pub dual: &'static str,
    /// `dim Pₙ` for `n = 1..=5`.
    pub dimensions: [u64; 5],
    /// The dimensions are conjectured, not proved.
    pub conjectural: bool,
}

pub const KNOWN_SERIES: [KnownSeries; 4] = [
    KnownSeries { name: "dend", dual: "-x/(1+x)^2", dimensions: [1, 2, 5, 14, 42], conjectural: false },
    KnownSeries { name: "admissible", dual: "-1+x^2+1/(1+x)", dimensions: [1, 2, 7, 31, 154], conjectural: false },
    KnownSeries { name: "predend", dual: "-1+x+1/(1+x)^2", dimensions: [1, 3, 14, 80, 510], conjectural: false },
    KnownSeries { name: "quadri", dual: "x*(-1+x)/(1+x)^3", dimensions: [1, 4, 23, 156, 1162], conjectural: true },
];

pub fn known_series(name: &str) -> Option<&'static KnownSeries> {
    KNOWN_SERIES.iter().find(|s| s.name == name)
}
