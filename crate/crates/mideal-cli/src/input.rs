//! Turning command-line arguments and JSON files into library values.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::Args;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use mideal::coxeter::{CoxeterWord, Permutation};
use mideal::ideal::IdealSpec;
use mideal::lexsegment::Lexsegment;
use mideal::simplicial::{ComplexSpec, SimplicialComplex};
use mideal::{fixtures, Monomial, MonomialIdeal};

use crate::report::Failure;

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

/// Deserialize a JSON file, naming the offending field on failure.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read_text(path)?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de)
        .map_err(|e| Failure::input(format!("{}: at `{}`: {}", path.display(), e.path(), e.inner())))
}

pub fn split_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

/// Parse monomials, in a given ring or inferring the number of variables.
pub fn monomials(n: Option<usize>, items: &[&str], field: &str) -> Result<(usize, Vec<Monomial>), Failure> {
    let n = match n {
        Some(n) => n,
        None => {
            let mut n = 0;
            for (k, s) in items.iter().enumerate() {
                let u = Monomial::parse_infer(s).map_err(|e| Failure::input(format!("{field}[{k}]: {e}")))?;
                n = n.max(u.n());
            }
            n
        }
    };
    let mut out = Vec::with_capacity(items.len());
    for (k, s) in items.iter().enumerate() {
        out.push(Monomial::parse(s, n).map_err(|e| Failure::input(format!("{field}[{k}]: {e}")))?);
    }
    Ok((n, out))
}

/// An ideal given inline or as `{"n": .., "gens": [..]}`.
#[derive(Args, Clone, Debug)]
pub struct IdealInput {
    /// Number of variables; inferred from the generators when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    /// Generators, comma separated, e.g. "x1^2*x2,x2*x3".
    #[arg(long, allow_hyphen_values = true)]
    pub gens: Option<String>,
    /// JSON file with fields n and gens; `-` reads stdin.
    #[arg(long, conflicts_with = "gens")]
    pub input: Option<PathBuf>,
}

pub struct Ideal {
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

impl IdealInput {
    pub fn is_given(&self) -> bool {
        self.gens.is_some() || self.input.is_some()
    }

    pub fn load(&self) -> Result<Ideal, Failure> {
        let (n, raw) = match (&self.gens, &self.input) {
            (Some(g), _) => {
                let items = split_list(g);
                monomials(self.n, &items, "gens")?
            }
            (None, Some(path)) => {
                let spec: IdealSpec = read_json(path)?;
                let items: Vec<&str> = spec.gens.iter().map(String::as_str).collect();
                monomials(Some(spec.n), &items, "gens")?
            }
            (None, None) => return Err(Failure::input("give the ideal with --gens or --input")),
        };
        let count = raw.len();
        let ideal = MonomialIdeal::minimalize(n, raw)?;
        let mut warnings = Vec::new();
        if ideal.len() < count {
            warnings.push(format!("{} redundant generators dropped", count - ideal.len()));
        }
        Ok(Ideal { ideal, warnings })
    }
}

pub fn ideal_json(i: &MonomialIdeal) -> Value {
    serde_json::to_value(i.to_spec()).expect("serializable")
}

#[derive(Args, Clone, Debug)]
pub struct SegmentInput {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    /// Largest monomial of the segment.
    #[arg(long)]
    pub u: String,
    /// Smallest monomial of the segment.
    #[arg(long)]
    pub v: String,
}

impl SegmentInput {
    pub fn load(&self) -> Result<Lexsegment, Failure> {
        Ok(Lexsegment::parse(self.n, self.d, &self.u, &self.v)?)
    }

    pub fn json(&self) -> Value {
        json!({ "n": self.n, "d": self.d, "u": self.u, "v": self.v })
    }
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum Named {
    ProjectivePlane,
    DunceHat,
    ZieglerBall,
    Hachimori,
    TriangleStrip,
    TwoEdges,
    FourCycle,
}

/// A complex given inline, as `{"n": .., "facets": [[..], ..]}`, or by name.
#[derive(Args, Clone, Debug)]
pub struct ComplexInput {
    /// Number of vertices; inferred from the facets when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    /// Facets separated by ';', vertices by ','; "{}" is the empty face.
    #[arg(long)]
    pub facets: Option<String>,
    /// JSON file with fields n and facets; `-` reads stdin.
    #[arg(long, conflicts_with = "facets")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, conflicts_with_all = ["facets", "input"])]
    pub named: Option<Named>,
}

pub struct Complex {
    pub complex: SimplicialComplex,
    pub warnings: Vec<String>,
}

fn parse_facets(s: &str) -> Result<Vec<Vec<usize>>, Failure> {
    let mut out = Vec::new();
    for (k, f) in s.split(';').map(str::trim).filter(|f| !f.is_empty()).enumerate() {
        if f == "{}" {
            out.push(Vec::new());
            continue;
        }
        let mut facet = Vec::new();
        for v in f.split([',', ' ']).filter(|v| !v.is_empty()) {
            facet.push(v.parse().map_err(|_| Failure::input(format!("facets[{k}]: bad vertex {v:?}")))?);
        }
        out.push(facet);
    }
    Ok(out)
}

impl ComplexInput {
    pub fn load(&self) -> Result<Complex, Failure> {
        if let Some(name) = self.named {
            let complex = match name {
                Named::ProjectivePlane => fixtures::projective_plane(),
                Named::DunceHat => fixtures::dunce_hat(),
                Named::ZieglerBall => fixtures::ziegler_ball(),
                Named::Hachimori => fixtures::hachimori(),
                Named::TriangleStrip => fixtures::triangle_strip(),
                Named::TwoEdges => fixtures::two_edges(),
                Named::FourCycle => fixtures::four_cycle(),
            };
            return Ok(Complex { complex, warnings: Vec::new() });
        }
        let spec = match (&self.facets, &self.input) {
            (Some(f), _) => {
                let facets = parse_facets(f)?;
                let n = self.n.unwrap_or_else(|| facets.iter().flatten().copied().max().unwrap_or(0));
                ComplexSpec { n, facets }
            }
            (None, Some(path)) => read_json(path)?,
            (None, None) => return Err(Failure::input("give the complex with --facets, --input or --named")),
        };
        let given = spec.facets.len();
        let complex = SimplicialComplex::from_facets(spec.n, &spec.facets)?;
        let mut warnings = Vec::new();
        if complex.facets().len() < given {
            warnings.push(format!("{} duplicate or non-maximal faces dropped", given - complex.facets().len()));
        }
        Ok(Complex { complex, warnings })
    }
}

pub fn complex_json(c: &SimplicialComplex) -> Value {
    serde_json::to_value(c.to_spec()).expect("serializable")
}

#[derive(Args, Clone, Debug)]
pub struct SubwordInput {
    /// Rank: the group is S_m.
    #[arg(long)]
    pub m: usize,
    /// Letters of the word, e.g. "1,2,1,3".
    #[arg(long)]
    pub word: String,
    /// The permutation, as cycles "(1 2 4)" or one-line "line:2,4,3,1".
    #[arg(long)]
    pub pi: String,
}

impl SubwordInput {
    pub fn load(&self) -> Result<(CoxeterWord, Permutation), Failure> {
        let word = CoxeterWord::parse(self.m, &self.word)?;
        let pi = Permutation::parse(self.m, &self.pi)?;
        Ok((word, pi))
    }

    pub fn json(&self, word: &CoxeterWord, pi: &Permutation) -> Value {
        json!({ "m": self.m, "word": word.letters(), "pi": pi.one_line() })
    }
}
