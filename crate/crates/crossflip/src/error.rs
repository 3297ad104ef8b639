use thiserror::Error;

/// Errors reported by complex construction, flips, search and file parsing.
#[derive(Debug, Error)]
pub enum Error {
    /// The void complex (no faces at all, not even the empty face) is not
    /// representable; constructors reject an empty facet list.
    #[error("void complex: a complex must carry at least the empty face")]
    VoidComplex,

    /// A face-local operation was asked about a face the complex lacks.
    #[error("face {0:?} is not present in the complex")]
    FaceNotPresent(Vec<u32>),

    /// Join operands share vertex labels.
    #[error("join operands share vertex labels: {0:?}")]
    LabelCollision(Vec<u32>),

    /// An operation that needs a pure complex got a non-pure one.
    #[error("complex is not pure: facet dimensions range from {min} to {max}")]
    NotPure { min: isize, max: isize },

    /// Isomorphism testing is capped to keep worst-case backtracking sane.
    #[error("complex has {got} vertices, above the isomorphism cap of {cap}")]
    SizeExceeded { got: usize, cap: usize },

    /// Flip templates are indexed by non-empty subsets of {0..d+1}.
    #[error("flip template index set is empty")]
    EmptyIndexSet,

    /// A template of one dimension was matched against a host of another.
    #[error("dimension mismatch: template is {template}-dimensional, host is {host}-dimensional")]
    DimMismatch { template: isize, host: isize },

    /// An embedding refers to facets the current complex no longer has.
    #[error("stale embedding: its image is no longer an induced subcomplex of the host")]
    StaleEmbedding,

    /// Search requires a balanced input.
    #[error("complex is not balanced: no proper {0}-coloring exists")]
    NotBalanced(usize),

    /// A search constraint refers to faces outside the complex.
    #[error("constraint edge {0:?} is not an edge of the complex")]
    BadConstraint(Vec<u32>),

    /// A protected edge was about to be destroyed; the run is aborted.
    #[error("protected edge {0:?} would be removed by a flip")]
    ConstraintViolated(Vec<u32>),

    /// classify_surface needs a closed surface.
    #[error("not a closed surface: {0}")]
    NotClosedSurface(String),

    /// A shelling order must be a permutation of the facet list.
    #[error("shelling order is not a permutation of the facets: {0}")]
    BadOrder(String),

    /// Gluing data for sums and handles is inconsistent.
    #[error("bad gluing: {0}")]
    BadGluing(String),

    /// Gluing data conflicts with the supplied colorings.
    #[error("color mismatch: {0}")]
    ColorMismatch(String),

    /// A facet file used a symbolic label with no `# map` line for it.
    #[error("line {line}: symbolic label {label:?} has no `# map {label} = <int>` entry")]
    NeedsNameMap { line: usize, label: String },

    /// Malformed input file.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
