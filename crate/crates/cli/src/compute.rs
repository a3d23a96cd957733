use crate::{emit_json, Failure, OutArgs, PolyArgs};
use clap::ValueEnum;
use zerograph::graphs::{generate, parse_hypergraph, GeneratorSpec, Graph, Hypergraph};
use zerograph::partition::{
    domination_poly_with, edge_cover_poly_with, independence_poly_with, ising_line_graph_poly_with,
    ising_line_graph_sym_with, ising_poly_sym_with, key_poly, maxcut_poly_with,
    relaxed_edge_cover_poly_with, total_domination_poly_with, Limits, RelaxedSpec,
};
use zerograph::poly::json::{BSymJson, PolyJson};
use zerograph::poly::{parse_rational, BSymPoly, ExactPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Edgecover,
    Ising,
    IsingLine,
    Domination,
    TotalDomination,
    Independence,
    Maxcut,
    Key,
}

#[derive(Debug, Clone)]
pub enum BArg {
    Sym,
    Value(Rational),
}

pub fn parse_b(s: &str) -> Result<BArg, String> {
    if s == "sym" {
        return Ok(BArg::Sym);
    }
    let b = parse_rational(s).map_err(|e| e.to_string())?;
    Ok(BArg::Value(b))
}

pub fn parse_relax(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|v| v.trim().parse().map_err(|e| format!("{v:?}: {e}")))
        .collect()
}

pub enum Source {
    None,
    Generated(GeneratorSpec),
    Text(String),
}

impl Source {
    pub fn hypergraph(&self) -> Result<Hypergraph, Failure> {
        match self {
            Source::None => Err(Failure::Usage("this kind needs --gen or --in".into())),
            Source::Generated(spec) => Ok(generate(spec)?.as_hypergraph().clone()),
            Source::Text(t) => Ok(parse_hypergraph(t)?),
        }
    }

    pub fn graph(&self) -> Result<Graph, Failure> {
        Ok(Graph::from_hypergraph(self.hypergraph()?)?)
    }
}

/// A computed polynomial with its variable name, or one still symbolic
/// in `b`.
pub enum Computed {
    Exact(ExactPoly, &'static str),
    Symbolic(BSymPoly),
}

impl Computed {
    pub fn write_json(&self, out: &OutArgs) -> Result<(), Failure> {
        match self {
            Computed::Exact(p, var) => emit_json(out, &PolyJson::from_poly(p, var)),
            Computed::Symbolic(p) => emit_json(out, &BSymJson::from_poly(p)),
        }
    }
}

pub fn compute(
    kind: Kind,
    src: Source,
    args: &PolyArgs,
    limits: &Limits,
) -> Result<Computed, Failure> {
    let usage = |m: &str| Err(Failure::Usage(m.into()));
    if args.relax.is_some() && kind != Kind::Edgecover {
        return usage("--relax applies to --kind edgecover only");
    }
    if args.d.is_some() && kind != Kind::Key {
        return usage("--d applies to --kind key only");
    }
    let takes_b = matches!(kind, Kind::Ising | Kind::IsingLine | Kind::Key);
    if args.b.is_some() && !takes_b {
        return usage("--b applies to ising, ising-line and key only");
    }
    if takes_b && args.b.is_none() {
        return usage("this kind needs --b");
    }
    let p = match kind {
        Kind::Key => {
            if !matches!(src, Source::None) {
                return usage("--kind key takes no graph input");
            }
            let Some(d) = args.d else {
                return usage("--kind key needs --d");
            };
            let Some(BArg::Value(b)) = &args.b else {
                return usage("--kind key needs a numeric --b");
            };
            Computed::Exact(key_poly(d, b)?, "z")
        }
        Kind::Edgecover => {
            let h = src.hypergraph()?;
            let p = match &args.relax {
                Some(s) => relaxed_edge_cover_poly_with(&RelaxedSpec::new(h, s)?, limits)?,
                None => edge_cover_poly_with(&h, limits)?,
            };
            Computed::Exact(p, "z")
        }
        Kind::Independence => {
            Computed::Exact(independence_poly_with(&src.hypergraph()?, limits)?, "z")
        }
        Kind::Domination => Computed::Exact(domination_poly_with(&src.graph()?, limits)?, "z"),
        Kind::TotalDomination => {
            Computed::Exact(total_domination_poly_with(&src.graph()?, limits)?, "z")
        }
        Kind::Maxcut => Computed::Exact(maxcut_poly_with(&src.graph()?, limits)?, "lambda"),
        Kind::Ising => {
            let sym = ising_poly_sym_with(&src.graph()?, limits)?;
            match &args.b {
                Some(BArg::Value(b)) => Computed::Exact(sym.eval_b(b)?, "lambda"),
                _ => Computed::Symbolic(sym),
            }
        }
        Kind::IsingLine => {
            let g = src.graph()?;
            match &args.b {
                Some(BArg::Value(b)) => {
                    Computed::Exact(ising_line_graph_poly_with(&g, b, limits)?, "lambda")
                }
                _ => Computed::Symbolic(ising_line_graph_sym_with(&g, limits)?),
            }
        }
    };
    Ok(p)
}
