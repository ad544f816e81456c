use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(u32),
    #[error("field of order {p}^{n} exceeds the supported size cap of {cap}")]
    FieldTooLarge { p: u32, n: u32, cap: u64 },
    #[error("element code {code} out of range for a field of order {q}")]
    ElementOutOfRange { code: u64, q: u32 },
    #[error("cannot parse field element {0:?}")]
    ElementParse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("[0,0] is not an element of the loop")]
    ZeroPair,
    #[error("x^2 - {r}x + {s} is reducible: {root} is a root")]
    Reducible { r: u32, s: u32, root: u32 },
    #[error("malformed Cayley table: {0}")]
    Malformed(String),
    #[error("element index {index} out of range for a loop of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("permutations act on different domains ({0} vs {1})")]
    DomainMismatch(usize, usize),
    #[error("not a bijection")]
    NotBijection,
    #[error("subset is not a normal subloop")]
    NotNormal,
    #[error("coset product is not well defined for cosets {0} and {1}")]
    IllDefinedQuotient(usize, usize),
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("target quadratic is not the Frobenius image of the source quadratic")]
    OrbitMismatch,
    #[error("loops are over different fields")]
    FieldMismatch,
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),
}
