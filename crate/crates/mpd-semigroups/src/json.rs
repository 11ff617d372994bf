//! JSON documents for the concrete [`Int`]-backed reports.
//!
//! Every document is a plain serde struct whose field order fixes the key
//! order of the serialized object, so output is byte-stable across runs.
//! Integers serialize as bare JSON number literals of arbitrary size (the
//! `arbitrary_precision` representation of [`serde_json::Number`]), never as
//! floats, and re-parse to the same [`Int`] values: every document
//! round-trips through its own serialization.
//!
//! The shared input formats are
//!
//! * semigroup documents `{"generators": [[2,11],[3,0],[5,9],[7,4]]}` (a
//!   bare array of generator vectors is also accepted), and
//! * term orders, either a bare kind string (`"grlex"`) or a document
//!   `{"kind":"grlex","permutation":[0,1]}`.
//!
//! Result documents carry an explicit `"status"` field wherever an
//! enumeration can be truncated: `"certified"` for complete results and
//! `"truncated"` (with the box in `"bound"`) otherwise.

use serde::{Deserialize, Serialize};
use serde_json::Number;
use thiserror::Error;

use crate::classify::{QfReport, SymmetryClass, SymmetryReport, WilfReport};
use crate::gaps::{EnumerationStatus, FrobeniusElement, GapSet, PfSet};
use crate::gluing::{GluingDecomposition, TransferReport, TransferWitness};
use crate::order::{OrderKind, TermOrder};
use crate::resolution::{BettiTable, KPolynomial};
use crate::rf::RFMatrix;
use crate::toric::{Binomial, GenericityReport};
use crate::{Int, Vector};

/// Ways a JSON document can fail to describe the requested object.
#[derive(Debug, Error)]
pub enum JsonError {
    /// The text is not valid JSON at all.
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    /// A number is not an integer literal.
    #[error("expected an integer, found `{0}`")]
    NotAnInteger(String),
    /// The document has the wrong shape for its role.
    #[error("malformed document: {0}")]
    Malformed(String),
    /// An order kind string is not recognized.
    #[error("unknown order kind `{0}` (expected lex, grlex, or grevlex)")]
    UnknownOrderKind(String),
    /// An order description is structurally invalid.
    #[error("invalid order: {0}")]
    Order(#[from] crate::order::OrderError),
}

/// Renders an [`Int`] as an exact JSON number literal.
pub fn int_to_number(x: &Int) -> Number {
    serde_json::from_str(&x.to_string()).expect("an integer literal is a JSON number")
}

/// Reads an exact [`Int`] back from a JSON number literal.
pub fn number_to_int(n: &Number) -> Result<Int, JsonError> {
    n.to_string()
        .parse::<Int>()
        .map_err(|_| JsonError::NotAnInteger(n.to_string()))
}

/// Renders a vector as a JSON array of integer literals.
pub fn vector_to_numbers(v: &Vector) -> Vec<Number> {
    v.coords().iter().map(int_to_number).collect()
}

/// Reads a vector back from a JSON array of integer literals.
pub fn numbers_to_vector(coords: &[Number]) -> Result<Vector, JsonError> {
    Ok(Vector::new(
        coords
            .iter()
            .map(number_to_int)
            .collect::<Result<Vec<Int>, JsonError>>()?,
    ))
}

/// Renders a list of vectors, sorted ascending.
pub fn vectors_to_numbers(vs: &[Vector]) -> Vec<Vec<Number>> {
    let mut sorted: Vec<&Vector> = vs.iter().collect();
    sorted.sort();
    sorted.into_iter().map(vector_to_numbers).collect()
}

/// A semigroup input document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    /// Generator vectors, one inner array per generator.
    pub generators: Vec<Vec<Number>>,
}

/// Parses generators from either a semigroup document
/// `{"generators": [...]}` or a bare array `[[2,11],[3,0]]`.
pub fn parse_generators(text: &str) -> Result<Vec<Vector>, JsonError> {
    let doc: SemigroupDoc = if text.trim_start().starts_with('[') {
        SemigroupDoc {
            generators: serde_json::from_str(text)?,
        }
    } else {
        serde_json::from_str(text)?
    };
    if doc.generators.is_empty() {
        return Err(JsonError::Malformed(
            "a semigroup needs at least one generator".into(),
        ));
    }
    doc.generators
        .iter()
        .map(|coords| numbers_to_vector(coords))
        .collect()
}

/// A term-order document: `{"kind":"grlex","permutation":[0,1]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderDoc {
    /// One of `"lex"`, `"grlex"`, `"grevlex"`.
    pub kind: String,
    /// Coordinate priority, most significant first.
    pub permutation: Vec<usize>,
}

/// Renders a term order as an [`OrderDoc`].
pub fn order_to_doc(order: &TermOrder) -> OrderDoc {
    let kind = match order.kind() {
        OrderKind::Lex => "lex",
        OrderKind::GradedLex => "grlex",
        OrderKind::GradedReverseLex => "grevlex",
        OrderKind::Weighted { .. } => "weighted",
    };
    OrderDoc {
        kind: kind.to_string(),
        permutation: order.permutation().to_vec(),
    }
}

/// Parses a term order from a bare kind string (`"grlex"`) or an
/// [`OrderDoc`]; `dim` fixes the ambient dimension for bare strings and
/// validates the permutation otherwise.
pub fn parse_order(text: &str, dim: usize) -> Result<TermOrder, JsonError> {
    let trimmed = text.trim();
    let (kind, permutation) = if trimmed.starts_with('{') {
        let doc: OrderDoc = serde_json::from_str(trimmed)?;
        (doc.kind, Some(doc.permutation))
    } else {
        (trimmed.trim_matches('"').to_string(), None)
    };
    let base = match kind.as_str() {
        "lex" => TermOrder::lex(dim),
        "grlex" => TermOrder::grlex(dim),
        "grevlex" => TermOrder::grevlex(dim),
        other => return Err(JsonError::UnknownOrderKind(other.to_string())),
    };
    match permutation {
        Some(p) => Ok(base.with_permutation(p)?),
        None => Ok(base),
    }
}

/// The status split every truncatable document shares.
fn status_fields(status: &EnumerationStatus<Int>) -> (String, Option<Vec<Number>>) {
    match status {
        EnumerationStatus::CertifiedComplete => ("certified".to_string(), None),
        EnumerationStatus::TruncatedAtBound(b) => {
            ("truncated".to_string(), Some(vector_to_numbers(b)))
        }
    }
}

/// Gap-set result: `{"gaps":[...],"status":"certified"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapsDoc {
    /// The gaps, ascending.
    pub gaps: Vec<Vec<Number>>,
    /// `"certified"` or `"truncated"`.
    pub status: String,
    /// The truncation box when the status is `"truncated"`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<Vec<Number>>,
}

impl GapsDoc {
    /// Builds the document for a computed gap set.
    pub fn from_gap_set(g: &GapSet<Int>) -> Self {
        let (status, bound) = status_fields(g.status());
        GapsDoc {
            gaps: vectors_to_numbers(g.elements()),
            status,
            bound,
        }
    }
}

/// Pseudo-Frobenius result: `{"pf":[...],"status":"certified"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PfDoc {
    /// The pseudo-Frobenius elements, ascending.
    pub pf: Vec<Vec<Number>>,
    /// `"certified"` or `"truncated"`.
    pub status: String,
    /// The truncation box when the status is `"truncated"`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<Vec<Number>>,
}

impl PfDoc {
    /// Builds the document for a computed pseudo-Frobenius set.
    pub fn from_pf_set(pf: &PfSet<Int>) -> Self {
        let (status, bound) = status_fields(pf.status());
        PfDoc {
            pf: vectors_to_numbers(pf.elements()),
            status,
            bound,
        }
    }
}

/// Frobenius-element result: `{"frobenius":[...],"status":"certified"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrobeniusDoc {
    /// The order-largest gap seen.
    pub frobenius: Vec<Number>,
    /// `"certified"` or `"truncated"`.
    pub status: String,
    /// The truncation box when the status is `"truncated"`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<Vec<Number>>,
}

impl FrobeniusDoc {
    /// Builds the document for a computed Frobenius element.
    pub fn from_frobenius(f: &FrobeniusElement<Int>) -> Self {
        let (status, bound) = status_fields(&f.status);
        FrobeniusDoc {
            frobenius: vector_to_numbers(&f.element),
            status,
            bound,
        }
    }
}

/// One nonzero Betti entry `β_{i,degree} = value`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BettiEntryDoc {
    /// Homological degree.
    pub i: usize,
    /// The multidegree carrying the syzygy.
    pub degree: Vec<Number>,
    /// `β_{i,degree}`.
    pub value: u64,
}

/// Betti-table result with totals and the resolution length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BettiDoc {
    /// Length of the minimal free resolution.
    pub length: usize,
    /// Total Betti numbers by homological degree.
    pub totals: Vec<u64>,
    /// Every nonzero multigraded entry.
    pub entries: Vec<BettiEntryDoc>,
}

impl BettiDoc {
    /// Builds the document for a computed Betti table.
    pub fn from_table(t: &BettiTable<Int>) -> Self {
        BettiDoc {
            length: t.resolution_length(),
            totals: t.totals(),
            entries: t
                .entries()
                .iter()
                .map(|e| BettiEntryDoc {
                    i: e.homological_degree,
                    degree: vector_to_numbers(&e.degree),
                    value: e.value,
                })
                .collect(),
        }
    }
}

/// One K-polynomial term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    /// The exponent of `t₁^{e₁}⋯t_d^{e_d}`.
    pub exponent: Vec<Number>,
    /// The integer coefficient.
    pub coefficient: i64,
}

/// K-polynomial result: terms sorted ascending by exponent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KPolyDoc {
    /// The nonzero terms, ascending by exponent.
    pub terms: Vec<TermDoc>,
}

impl KPolyDoc {
    /// Builds the document for a computed K-polynomial.
    pub fn from_k_polynomial(k: &KPolynomial<Int>) -> Self {
        let mut terms: Vec<(&Vector, i64)> = k.terms().collect();
        terms.sort_by(|a, b| a.0.cmp(b.0));
        KPolyDoc {
            terms: terms
                .into_iter()
                .map(|(e, c)| TermDoc {
                    exponent: vector_to_numbers(e),
                    coefficient: c,
                })
                .collect(),
        }
    }
}

/// A binomial `x^plus − x^minus` of the defining ideal:
/// `{"plus": [...], "minus": [...], "degree": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinomialDoc {
    /// Exponent of the leading monomial.
    pub plus: Vec<Number>,
    /// Exponent of the trailing monomial.
    pub minus: Vec<Number>,
    /// The common image degree of both monomials.
    pub degree: Vec<Number>,
}

impl BinomialDoc {
    /// Builds the document for a binomial.
    pub fn from_binomial(b: &Binomial<Int>) -> Self {
        BinomialDoc {
            plus: vector_to_numbers(b.plus()),
            minus: vector_to_numbers(b.minus()),
            degree: vector_to_numbers(b.degree()),
        }
    }
}

/// Minimal generating set of the defining ideal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealDoc {
    /// Minimal binomial generators.
    pub generators: Vec<BinomialDoc>,
}

/// Genericity report for the defining ideal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenericDoc {
    /// True when every minimal generator has full support.
    pub is_generic: bool,
    /// Minimal generators missing a variable.
    pub missing_support: Vec<BinomialDoc>,
    /// Minimal generators whose fiber allows an alternative choice.
    pub dispensable: Vec<BinomialDoc>,
}

impl GenericDoc {
    /// Builds the document for a genericity report.
    pub fn from_report(r: &GenericityReport<Int>) -> Self {
        GenericDoc {
            is_generic: r.is_generic,
            missing_support: r.missing_support.iter().map(BinomialDoc::from_binomial).collect(),
            dispensable: r.dispensable.iter().map(BinomialDoc::from_binomial).collect(),
        }
    }
}

/// One RF-matrix, rows indexed by generators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RfDoc {
    /// The pseudo-Frobenius element the matrix witnesses.
    pub f: Vec<Number>,
    /// The matrix rows; row `i` has `-1` in column `i`.
    pub matrix: Vec<Vec<Number>>,
}

impl RfDoc {
    /// Builds the document for the RF-matrix of `f`.
    pub fn from_matrix(f: &Vector, m: &RFMatrix<Int>) -> Self {
        RfDoc {
            f: vector_to_numbers(f),
            matrix: m.rows().iter().map(vector_to_numbers).collect(),
        }
    }
}

/// RF-matrices over a whole pseudo-Frobenius set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RfListDoc {
    /// One canonical matrix per pseudo-Frobenius element, ascending by `f`.
    pub matrices: Vec<RfDoc>,
}

/// RF-relations result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RfRelDoc {
    /// The harvested relations, deduplicated up to sign.
    pub relations: Vec<BinomialDoc>,
}

/// One gluing decomposition: an index partition and the glue degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GluingDoc {
    /// Generator indices of the left part, ascending.
    pub left: Vec<usize>,
    /// Generator indices of the right part, ascending.
    pub right: Vec<usize>,
    /// The common element generating the intersection group.
    pub d: Vec<Number>,
}

impl GluingDoc {
    /// Builds the document for a verified decomposition.
    pub fn from_decomposition(dec: &GluingDecomposition<Int>) -> Self {
        GluingDoc {
            left: dec.left_indices().to_vec(),
            right: dec.right_indices().to_vec(),
            d: vector_to_numbers(dec.d()),
        }
    }
}

/// All gluings found by the exhaustive partition search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GluingsDoc {
    /// The verified decompositions, in search order.
    pub gluings: Vec<GluingDoc>,
}

/// Verification verdict for one proposed gluing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    /// Whether the partition and degree form a gluing.
    pub is_gluing: bool,
}

/// One transfer witness: paired rows and their lifted factorizations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    /// Pseudo-Frobenius element of the left component.
    pub left_pf: Vec<Number>,
    /// RF-matrix row of the left component.
    pub left_row: Vec<Number>,
    /// Its lift to a factorization of `f₁ + d`.
    pub left_lift: Vec<Number>,
    /// Pseudo-Frobenius element of the right component.
    pub right_pf: Vec<Number>,
    /// RF-matrix row of the right component.
    pub right_row: Vec<Number>,
    /// Its lift to a factorization of `f₂ + d`.
    pub right_lift: Vec<Number>,
}

impl WitnessDoc {
    /// Builds the document for one transfer witness.
    pub fn from_witness(w: &TransferWitness<Int>) -> Self {
        WitnessDoc {
            left_pf: vector_to_numbers(&w.left_pf),
            left_row: vector_to_numbers(&w.left_row),
            left_lift: vector_to_numbers(&w.left_lift),
            right_pf: vector_to_numbers(&w.right_pf),
            right_row: vector_to_numbers(&w.right_row),
            right_lift: vector_to_numbers(&w.right_lift),
        }
    }
}

/// Transfer report: the bridging binomial and every witness pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransferDoc {
    /// The binomial bridging the two generator blocks.
    pub bridge: BinomialDoc,
    /// All witness pairs found, deterministic order.
    pub witnesses: Vec<WitnessDoc>,
}

impl TransferDoc {
    /// Builds the document for a transfer report.
    pub fn from_report(r: &TransferReport<Int>) -> Self {
        TransferDoc {
            bridge: BinomialDoc::from_binomial(&r.bridge),
            witnesses: r.witnesses.iter().map(WitnessDoc::from_witness).collect(),
        }
    }
}

/// Symmetry classification result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    /// `"symmetric"`, `"pseudo-symmetric"`, `"almost-symmetric"`, `"none"`.
    pub classification: String,
    /// The Frobenius element used for the pairing.
    pub frobenius: Vec<Number>,
    /// The pseudo-Frobenius elements, ascending.
    pub pf: Vec<Vec<Number>>,
    /// The unpaired gaps, ascending.
    pub unpaired: Vec<Vec<Number>>,
}

impl ClassifyDoc {
    /// Builds the document for a symmetry report.
    pub fn from_report(r: &SymmetryReport<Int>) -> Self {
        let classification = match r.classification {
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::PseudoSymmetric => "pseudo-symmetric",
            SymmetryClass::AlmostSymmetric => "almost-symmetric",
            SymmetryClass::None => "none",
        };
        ClassifyDoc {
            classification: classification.to_string(),
            frobenius: vector_to_numbers(&r.frobenius),
            pf: vectors_to_numbers(r.pf.elements()),
            unpaired: vectors_to_numbers(&r.unpaired),
        }
    }
}

/// Wilf-style count result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WilfDoc {
    /// The Frobenius element under the chosen order.
    pub frobenius: Vec<Number>,
    /// `|H(S)|`.
    pub gap_count: usize,
    /// Semigroup elements strictly preceding the Frobenius element.
    pub below: usize,
    /// Cone lattice points weakly preceding it.
    pub region: usize,
    /// Whether `e(S) · below ≥ region`.
    pub holds: bool,
}

impl WilfDoc {
    /// Builds the document for a Wilf report.
    pub fn from_report(r: &WilfReport<Int>) -> Self {
        WilfDoc {
            frobenius: vector_to_numbers(&r.frobenius),
            gap_count: r.gap_count,
            below: r.below,
            region: r.region,
            holds: r.holds,
        }
    }
}

/// Quasi-Frobenius result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QfDoc {
    /// The single minimal generator on each extremal ray.
    pub rays: Vec<Vec<Number>>,
    /// The `≤_S`-maximal elements of the ray Apéry intersection.
    pub maxima: Vec<Vec<Number>>,
    /// The quasi-Frobenius elements, ascending.
    pub elements: Vec<Vec<Number>>,
}

impl QfDoc {
    /// Builds the document for a quasi-Frobenius report.
    pub fn from_report(r: &QfReport<Int>) -> Self {
        QfDoc {
            rays: r.rays.iter().map(vector_to_numbers).collect(),
            maxima: vectors_to_numbers(&r.apery_maxima),
            elements: vectors_to_numbers(&r.elements),
        }
    }
}
