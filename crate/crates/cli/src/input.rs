use std::path::Path;

use anyhow::{anyhow, bail, ensure, Context, Result};
use froblift::{
    default_var_names, parse_poly, ChartLifting, MultiPoly, Prime, TraceSplitting, Zmod,
};
use serde::de::DeserializeOwned;
use serde::Deserialize;

/// JSON unless the extension is `.toml`.
pub fn read_structured<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_toml = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("toml"));
    if is_toml {
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    } else {
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }
}

pub fn prime(p: u64) -> Result<Prime> {
    Prime::new(p).map_err(|e| anyhow!("--p {p}: {e}"))
}

pub fn check_names(vars: &[String]) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        ensure!(!vars[..i].contains(v), "variable `{v}` listed twice");
        ensure!(
            v.chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'),
            "`{v}` is not a valid variable name"
        );
    }
    Ok(())
}

/// A comma separated list of names; `None` means `x1..xn`.
pub fn names_or_default(vars: Option<&str>, n: usize) -> Result<Vec<String>> {
    let names = match vars {
        Some(s) => s.split(',').map(|v| v.trim().to_string()).collect(),
        None => default_var_names(n),
    };
    check_names(&names)?;
    Ok(names)
}

/// `x1..xk` with `k` the largest index written as `x<k>` in any of `texts`.
pub fn infer_default_names<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<Vec<String>> {
    let mut k = 0usize;
    for text in texts {
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_alphabetic() || c == b'_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                if let Some(n) = word.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                    ensure!(
                        n > 0,
                        "`x0` is not a default variable name; they start at x1"
                    );
                    k = k.max(n);
                }
            } else {
                i += 1;
            }
        }
    }
    Ok(default_var_names(k.max(1)))
}

pub fn poly(text: &str, vars: &[String], ring: &Zmod) -> Result<MultiPoly> {
    parse_poly(text, vars, ring).map_err(|e| anyhow!("in `{text}`: {e}"))
}

/// Semicolon separated polynomials.
pub fn poly_list(text: &str, vars: &[String], ring: &Zmod) -> Result<Vec<MultiPoly>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| poly(s, vars, ring))
        .collect()
}

/// A variable given by name or by 1-based position.
pub fn resolve_var(token: &str, vars: &[String]) -> Result<usize> {
    let token = token.trim();
    if let Some(i) = vars.iter().position(|v| v == token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(k) if (1..=vars.len()).contains(&k) => Ok(k - 1),
        _ => bail!("unknown variable `{token}` (have {})", vars.join(", ")),
    }
}

pub fn int_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .with_context(|| format!("`{}` is not an integer", s.trim()))
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChartFile {
    p: Option<u64>,
    vars: Option<Vec<String>>,
    images: Vec<String>,
    log_rank: Option<usize>,
    center: Option<Vec<String>>,
}

pub struct Chart {
    pub lifting: ChartLifting,
    pub vars: Vec<String>,
    pub log_rank: Option<usize>,
    pub center: Option<Vec<usize>>,
}

impl Chart {
    pub fn fp(&self) -> Zmod {
        self.lifting.ring_p()
    }

    pub fn zp2(&self) -> Zmod {
        self.lifting.ring_p2()
    }
}

fn pick_prime(from_file: Option<u64>, flag: Option<u64>, path: &Path) -> Result<Prime> {
    match (from_file, flag) {
        (Some(a), Some(b)) if a != b => {
            bail!("{} has p = {a} but --p {b} was given", path.display())
        }
        (Some(p), _) | (None, Some(p)) => prime(p),
        (None, None) => bail!("{} has no `p`; pass --p", path.display()),
    }
}

/// `{ p, vars?, images, log_rank?, center? }`; images are read over `Z/p^2`.
pub fn load_chart(path: &Path, p_flag: Option<u64>) -> Result<Chart> {
    let file: ChartFile = read_structured(path)?;
    let prime = pick_prime(file.p, p_flag, path)?;
    let n = file.images.len();
    ensure!(n > 0, "{}: `images` is empty", path.display());
    let vars = file.vars.unwrap_or_else(|| default_var_names(n));
    check_names(&vars)?;
    ensure!(
        vars.len() == n,
        "{}: {} variables but {} images",
        path.display(),
        vars.len(),
        n
    );
    let ring = Zmod::zp2(prime.clone());
    let images = file
        .images
        .iter()
        .map(|s| poly(s, &vars, &ring))
        .collect::<Result<Vec<_>>>()?;
    let lifting =
        ChartLifting::new(prime, images).with_context(|| format!("chart {}", path.display()))?;
    let center = file
        .center
        .map(|c| {
            c.iter()
                .map(|t| resolve_var(t, &vars))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    Ok(Chart {
        lifting,
        vars,
        log_rank: file.log_rank,
        center,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SplittingFile {
    p: Option<u64>,
    vars: Vec<String>,
    u: String,
}

pub struct Splitting {
    pub sigma: TraceSplitting,
    pub vars: Vec<String>,
}

impl Splitting {
    pub fn fp(&self) -> Zmod {
        self.sigma.key().ring().clone()
    }
}

/// `{ p, vars, u }` with `u` over `F_p`.
pub fn load_splitting(path: &Path, p_flag: Option<u64>) -> Result<Splitting> {
    let file: SplittingFile = read_structured(path)?;
    let prime = pick_prime(file.p, p_flag, path)?;
    splitting_from_parts(prime, file.vars, &file.u)
}

pub fn splitting_from_parts(prime: Prime, vars: Vec<String>, u: &str) -> Result<Splitting> {
    check_names(&vars)?;
    ensure!(!vars.is_empty(), "a splitting needs at least one variable");
    let key = poly(u, &vars, &Zmod::fp(prime))?;
    Ok(Splitting {
        sigma: TraceSplitting::new(key)?,
        vars,
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupFile {
    Bare(Vec<Vec<String>>),
    Keyed { maps: Vec<Vec<String>> },
}

/// A list of substitution maps, each a list of images of the variables.
pub fn load_group(path: &Path, vars: &[String], ring: &Zmod) -> Result<Vec<Vec<MultiPoly>>> {
    let maps = match read_structured::<GroupFile>(path)? {
        GroupFile::Bare(m) | GroupFile::Keyed { maps: m } => m,
    };
    maps.iter()
        .map(|m| m.iter().map(|s| poly(s, vars, ring)).collect())
        .collect()
}
