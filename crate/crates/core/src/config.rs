/// Caps that keep enumeration and linear algebra at desk scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Total degree cap for T-ideal components and congruence checks.
    pub max_degree: usize,
    /// Longest monomial [`crate::monomial::enumerate_monomials`] will produce.
    pub max_enumeration_length: usize,
    /// Highest tower level the CLI builds.
    pub max_level: usize,
    /// Largest search space the identity checker walks exhaustively.
    pub exhaustive_bound: u64,
    /// Most coefficient classes the identity checker compares over a small prime field.
    pub max_coefficient_classes: u64,
    /// Largest structure-constant algebra a tower builder will produce.
    pub max_dimension: usize,
}

/// Environment variable overriding [`Limits::max_degree`].
pub const MAX_DEGREE_ENV: &str = "SEPARATIVE_MAX_DEGREE";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 8,
            max_enumeration_length: 12,
            max_level: 10,
            exhaustive_bound: 1 << 20,
            max_coefficient_classes: 1 << 20,
            max_dimension: 4096,
        }
    }
}

impl Limits {
    /// Defaults, with the degree cap taken from the environment when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(d) = std::env::var(MAX_DEGREE_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            limits.max_degree = d;
        }
        limits
    }
}
