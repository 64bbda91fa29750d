use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypercore::{Graph, Hypergraph, Pair};

use super::PartialExpansion;

/// Which edges of a fan a partial expansion enlarges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanEdges {
    All,
    None,
    /// Edges through the center.
    Close,
    /// Edges avoiding the center.
    Far,
}

/// A textual address for one member of a named family.
///
/// Grammar: `<kind> key=value ...`, with kinds
///
/// | kind | keys | meaning |
/// |------|------|---------|
/// | `fan` | `t [r]` | `t`-fan, `r`-expanded when `r` is given |
/// | `k-fan` | `t k [r]` | `t` copies of `K_k` sharing one vertex |
/// | `star` | `t [r]` | `K_{1,t}` / the expanded star `S_t^r` |
/// | `triangle` | `[r]` | `K_3` / `K_3^r` |
/// | `clique` | `k [r]` | `K_k` |
/// | `path` | `k [r]` | path on `k` vertices |
/// | `complete` | `n [r]` | complete `r`-graph, `r` defaults to 2 |
/// | `partial-fan` | `t enlarged r` | partial expansion of the `t`-fan; `enlarged` is `all`, `none`, `close` or `far` |
/// | `fan-plus` | `t i` | `F_t^3(i)` |
/// | `hyperfan` | `t r` | `F(t, r)` |
/// | `star-cover` | `n t r` | all `r`-sets meeting `{0..t-1}` |
/// | `set-triangle` | `r` | three pairwise intersecting hyperedges with no common vertex, all intersection sizes |
///
/// Underscores are accepted in place of hyphens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Fan { t: usize, r: Option<usize> },
    KFan { t: usize, k: usize, r: Option<usize> },
    Star { t: usize, r: Option<usize> },
    Triangle { r: Option<usize> },
    Clique { k: usize, r: Option<usize> },
    Path { k: usize, r: Option<usize> },
    Complete { n: usize, r: usize },
    PartialFan { t: usize, enlarged: FanEdges, r: usize },
    FanPlus { t: usize, i: usize },
    Hyperfan { t: usize, r: usize },
    StarCover { n: usize, t: usize, r: usize },
    SetTriangle { r: usize },
}

impl FamilySpec {
    /// The plain graph named by a graph family (any `r` is ignored).
    pub fn core_graph(&self) -> Result<Graph> {
        Ok(match *self {
            FamilySpec::Fan { t, .. } => super::t_fan(t)?.graph,
            FamilySpec::KFan { t, k, .. } => super::k_fan(t, k)?.graph,
            FamilySpec::Star { t, .. } => super::star_graph(t).graph,
            FamilySpec::Triangle { .. } => super::triangle(),
            FamilySpec::Clique { k, .. } => super::complete_graph(k),
            FamilySpec::Path { k, .. } => super::path_graph(k),
            FamilySpec::Complete { n, r: 2 } => super::complete_graph(n),
            _ => {
                return Err(Error::input(format!(
                    "`{self}` is not the expansion of a graph"
                )))
            }
        })
    }

    /// Expansion uniformity requested by a graph family, if any.
    pub fn expansion_uniformity(&self) -> Option<usize> {
        match *self {
            FamilySpec::Fan { r, .. }
            | FamilySpec::KFan { r, .. }
            | FamilySpec::Star { r, .. }
            | FamilySpec::Triangle { r }
            | FamilySpec::Clique { r, .. }
            | FamilySpec::Path { r, .. } => r,
            _ => None,
        }
    }

    /// The uniform hypergraph this spec names.
    pub fn hypergraph(&self) -> Result<Hypergraph> {
        match *self {
            FamilySpec::Complete { n, r } => Hypergraph::complete(n, r),
            FamilySpec::FanPlus { t, i } => super::fan_plus(t, i),
            FamilySpec::Hyperfan { t, r } => super::hyperfan(t, r),
            FamilySpec::StarCover { n, t, r } => super::star_cover(n, t, r),
            FamilySpec::Star { t, r: Some(r) } => Ok(super::star_expansion(t, r)?.0),
            FamilySpec::PartialFan { .. } => Err(Error::input(
                "a partial expansion mixes pairs and hyperedges and is not uniform",
            )),
            FamilySpec::SetTriangle { r } => {
                let mut all = super::set_triangles(r)?;
                if all.len() == 1 {
                    Ok(all.remove(0))
                } else {
                    Err(Error::input(format!("`{self}` names {} hypergraphs", all.len())))
                }
            }
            _ => {
                let r = self.expansion_uniformity().unwrap_or(2);
                Ok(super::expand(&self.core_graph()?, r)?.0)
            }
        }
    }

    pub fn partial_expansion(&self) -> Result<PartialExpansion> {
        let FamilySpec::PartialFan { t, enlarged, r } = *self else {
            return Err(Error::input(format!("`{self}` is not a partial expansion")));
        };
        let fan = super::t_fan(t)?;
        let edges: Vec<Pair> = fan
            .graph
            .edges()
            .filter(|e| match enlarged {
                FanEdges::All => true,
                FanEdges::None => false,
                FanEdges::Close => e.contains(fan.center),
                FanEdges::Far => !e.contains(fan.center),
            })
            .collect();
        super::partial_expand(&fan.graph, &edges, r)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt_r = |r: &Option<usize>| r.map(|r| format!(" r={r}")).unwrap_or_default();
        match self {
            FamilySpec::Fan { t, r } => write!(f, "fan t={t}{}", opt_r(r)),
            FamilySpec::KFan { t, k, r } => write!(f, "k-fan t={t} k={k}{}", opt_r(r)),
            FamilySpec::Star { t, r } => write!(f, "star t={t}{}", opt_r(r)),
            FamilySpec::Triangle { r } => write!(f, "triangle{}", opt_r(r)),
            FamilySpec::Clique { k, r } => write!(f, "clique k={k}{}", opt_r(r)),
            FamilySpec::Path { k, r } => write!(f, "path k={k}{}", opt_r(r)),
            FamilySpec::Complete { n, r } => write!(f, "complete n={n} r={r}"),
            FamilySpec::PartialFan { t, enlarged, r } => {
                let which = match enlarged {
                    FanEdges::All => "all",
                    FanEdges::None => "none",
                    FanEdges::Close => "close",
                    FanEdges::Far => "far",
                };
                write!(f, "partial-fan t={t} enlarged={which} r={r}")
            }
            FamilySpec::FanPlus { t, i } => write!(f, "fan-plus t={t} i={i}"),
            FamilySpec::Hyperfan { t, r } => write!(f, "hyperfan t={t} r={r}"),
            FamilySpec::StarCover { n, t, r } => write!(f, "star-cover n={n} t={t} r={r}"),
            FamilySpec::SetTriangle { r } => write!(f, "set-triangle r={r}"),
        }
    }
}

struct Params {
    kind: String,
    values: BTreeMap<String, String>,
}

impl Params {
    fn take(&mut self, key: &str) -> Result<Option<usize>> {
        self.values
            .remove(key)
            .map(|v| {
                v.parse::<usize>().map_err(|_| {
                    Error::input(format!("`{key}={v}` is not a non-negative integer"))
                })
            })
            .transpose()
    }

    fn need(&mut self, key: &str) -> Result<usize> {
        self.take(key)?
            .ok_or_else(|| Error::input(format!("`{}` requires `{key}=`", self.kind)))
    }

    fn finish(self, spec: FamilySpec) -> Result<FamilySpec> {
        if let Some(key) = self.values.keys().next() {
            return Err(Error::input(format!("unknown key `{key}` for `{}`", self.kind)));
        }
        validate(&spec)?;
        Ok(spec)
    }
}

fn validate(spec: &FamilySpec) -> Result<()> {
    let bad = |msg: &str| Err(Error::input(format!("`{spec}`: {msg}")));
    let r_ok = |r: &Option<usize>| r.is_none_or(|r| r >= 2);
    match spec {
        FamilySpec::Fan { t, r } | FamilySpec::Star { t, r } if *t == 0 || !r_ok(r) => {
            bad("need t >= 1 and r >= 2")
        }
        FamilySpec::KFan { t, k, r } if *t == 0 || *k < 3 || !r_ok(r) => {
            bad("need t >= 1, k >= 3 and r >= 2")
        }
        FamilySpec::Triangle { r } | FamilySpec::Clique { r, .. } | FamilySpec::Path { r, .. }
            if !r_ok(r) =>
        {
            bad("need r >= 2")
        }
        FamilySpec::Complete { r, .. } if *r == 0 => bad("need r >= 1"),
        FamilySpec::SetTriangle { r } if *r < 2 => bad("need r >= 2"),
        FamilySpec::PartialFan { t, r, .. } if *t == 0 || *r < 2 => bad("need t >= 1 and r >= 2"),
        FamilySpec::FanPlus { t, i } if *t == 0 || i > t => bad("need 0 <= i <= t and t >= 1"),
        FamilySpec::Hyperfan { t, r } if *t == 0 || *r < 3 => bad("need t >= 1 and r >= 3"),
        FamilySpec::StarCover { n, t, r } if t > n || r > n || *r == 0 => {
            bad("need t <= n and 1 <= r <= n")
        }
        _ => Ok(()),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let kind = tokens
            .next()
            .ok_or_else(|| Error::input("empty family spec"))?
            .replace('_', "-");
        let mut values = BTreeMap::new();
        let mut enlarged = None;
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::input(format!("expected key=value, got `{tok}`")))?;
            if k == "enlarged" {
                enlarged = Some(match v {
                    "all" => FanEdges::All,
                    "none" => FanEdges::None,
                    "close" => FanEdges::Close,
                    "far" => FanEdges::Far,
                    _ => return Err(Error::input(format!("unknown edge selection `{v}`"))),
                });
                continue;
            }
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(Error::input(format!("key `{k}` given twice")));
            }
        }
        let mut p = Params { kind: kind.clone(), values };
        let spec = match kind.as_str() {
            "fan" => FamilySpec::Fan { t: p.need("t")?, r: p.take("r")? },
            "k-fan" => FamilySpec::KFan { t: p.need("t")?, k: p.need("k")?, r: p.take("r")? },
            "star" => FamilySpec::Star { t: p.need("t")?, r: p.take("r")? },
            "triangle" => FamilySpec::Triangle { r: p.take("r")? },
            "clique" => FamilySpec::Clique { k: p.need("k")?, r: p.take("r")? },
            "path" => FamilySpec::Path { k: p.need("k")?, r: p.take("r")? },
            "complete" => FamilySpec::Complete { n: p.need("n")?, r: p.take("r")?.unwrap_or(2) },
            "partial-fan" => FamilySpec::PartialFan {
                t: p.need("t")?,
                enlarged: enlarged
                    .take()
                    .ok_or_else(|| Error::input("`partial-fan` requires `enlarged=`"))?,
                r: p.need("r")?,
            },
            "fan-plus" => FamilySpec::FanPlus { t: p.need("t")?, i: p.need("i")? },
            "hyperfan" => FamilySpec::Hyperfan { t: p.need("t")?, r: p.need("r")? },
            "star-cover" => FamilySpec::StarCover { n: p.need("n")?, t: p.need("t")?, r: p.need("r")? },
            "set-triangle" => FamilySpec::SetTriangle { r: p.need("r")? },
            other => return Err(Error::input(format!("unknown family `{other}`"))),
        };
        if enlarged.is_some() {
            return Err(Error::input(format!("`{kind}` does not take `enlarged=`")));
        }
        p.finish(spec)
    }
}
