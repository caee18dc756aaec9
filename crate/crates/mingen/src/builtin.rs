//! Parser for `--builtin` family specs.

use cayley::{io, Error, FiniteGroup, Result};

/// Grammar: `trivial`, `klein4`, `cyclic:N`, `dihedral:N`, `symmetric:N`,
/// or `product:<spec>*<spec>*...` over the non-product forms.
pub fn parse_builtin(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("product:") {
        let parts: Vec<&str> = rest.split('*').collect();
        if parts.len() < 2 {
            return Err(Error::Usage(
                "product needs at least two factors, e.g. product:cyclic:2*cyclic:2".into(),
            ));
        }
        let mut acc = parse_simple(parts[0])?;
        for part in &parts[1..] {
            acc = io::direct_product(&acc, &parse_simple(part)?)?;
        }
        return Ok(acc);
    }
    parse_simple(spec)
}

fn parse_simple(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    match spec {
        "trivial" => return io::cyclic(1),
        "klein4" => return io::klein4(),
        _ => {}
    }
    let (family, param) = spec.split_once(':').ok_or_else(|| unknown(spec))?;
    let n: usize = param
        .parse()
        .map_err(|_| Error::Usage(format!("bad parameter '{param}' in builtin '{spec}'")))?;
    match family {
        "cyclic" => io::cyclic(n),
        "dihedral" => io::dihedral(n),
        "symmetric" => io::symmetric(n),
        _ => Err(unknown(spec)),
    }
}

fn unknown(spec: &str) -> Error {
    Error::Usage(format!(
        "unknown builtin '{spec}'; expected trivial, klein4, cyclic:N, dihedral:N, \
         symmetric:N, or product:..."
    ))
}
