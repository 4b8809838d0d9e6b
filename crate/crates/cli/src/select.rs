use diraccoh::catalog::{gl_maxpar_family, make_spec, Exceptional, Flavor, Parity, UnipotentSpec};
use diraccoh::{Error, Result};

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn nums<T: std::str::FromStr>(args: &[String], want: usize, form: &str) -> Result<Vec<T>> {
    if args.len() != want {
        return Err(usage(format!("expected {form}")));
    }
    args.iter().map(|s| s.parse().map_err(|_| usage(format!("`{s}` is not a number; expected {form}")))).collect()
}

/// Resolves `series N flavor params...` or a single flavor string such as
/// `so-odd(1,2)` into a catalog spec; `N` is the size of the matrix group.
pub fn spec_from_selector(words: &[String]) -> Result<UnipotentSpec> {
    if let [single] = words {
        return match single.parse::<Flavor>()? {
            Flavor::GlMaxpar { alpha, beta, k, l } => gl_maxpar_family(alpha, beta, k, l),
            f => make_spec(f),
        };
    }
    let [series, n, flavor, rest @ ..] = words else {
        return Err(usage("expected `SERIES N FLAVOR [PARAMS..]` or a flavor such as `so-odd(1,2)`"));
    };
    let n: u32 = n.parse().map_err(|_| usage(format!("`{n}` is not a group size")))?;
    let spec = match (series.to_ascii_lowercase().as_str(), flavor.as_str()) {
        ("gl", "two-column") => {
            let v = nums::<u32>(rest, 2, "two-column A B")?;
            make_spec(Flavor::GlTwoColumn { a: v[0], b: v[1] })?
        }
        ("gl", "maxpar") => {
            let v = nums::<i64>(rest, 4, "maxpar ALPHA BETA K L")?;
            gl_maxpar_family(v[0], v[1], v[2], v[3])?
        }
        ("sp", f @ ("metaplectic-odd" | "metaplectic-even")) => {
            if n % 2 != 0 {
                return Err(usage(format!("sp {n}: the size of a symplectic group is even")));
            }
            nums::<u32>(rest, 0, "no parameters after the metaplectic flavor")?;
            let parity = if f.ends_with("odd") { Parity::Odd } else { Parity::Even };
            make_spec(Flavor::SpMetaplectic { n: n / 2, parity })?
        }
        ("so", "unipotent") => {
            let v = nums::<u32>(rest, 2, "unipotent A B")?;
            make_spec(Flavor::SoOdd { a: v[0], b: v[1] })?
        }
        ("so", f @ ("spherical" | "nonspherical")) => {
            let v = nums::<u32>(rest, 2, "spherical|nonspherical A B")?;
            make_spec(Flavor::SoEven { a: v[0], b: v[1], spherical: f == "spherical" })?
        }
        ("e", label) => {
            nums::<u32>(rest, 0, "no parameters after the exceptional label")?;
            let name = format!("E{n}-{label}");
            let e = Exceptional::ALL
                .into_iter()
                .find(|e| e.name().eq_ignore_ascii_case(&name))
                .ok_or_else(|| usage(format!("no exceptional parameter {name}")))?;
            make_spec(Flavor::Exceptional(e))?
        }
        (s, f) => return Err(usage(format!("unknown selector `{s} {f}`"))),
    };
    let size = group_size(&spec);
    if size != n {
        return Err(usage(format!("{} lives in a group of size {size}, not {n}", spec.label())));
    }
    Ok(spec)
}

/// `N` for `GL(N)`, `Sp(N)`, `SO(N)`; the rank for exceptional groups.
fn group_size(spec: &UnipotentSpec) -> u32 {
    let r = spec.system.rank() as u32;
    match spec.flavor {
        Flavor::GlTwoColumn { .. } | Flavor::GlMaxpar { .. } => spec.system.ambient_dim() as u32,
        Flavor::SpMetaplectic { .. } | Flavor::SoEven { .. } => 2 * r,
        Flavor::SoOdd { .. } => 2 * r + 1,
        Flavor::Exceptional(_) => r,
    }
}
