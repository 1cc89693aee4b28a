//! Value grids on the command line: `1e-5`, `1,2,5`, `1:100:log`,
//! `1:100:log:7`, `0:1:lin:11`.

/// Points per decade when a log range gives no count.
const PER_DECADE: f64 = 10.0;

pub fn parse_grid(text: &str) -> Result<Vec<f64>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty grid".into());
    }
    let values = if text.contains(':') {
        parse_range(text)?
    } else {
        text.split(',')
            .map(parse_number)
            .collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(format!("grid `{text}` has no points"));
    }
    Ok(values)
}

fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !v.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(v)
}

fn parse_range(text: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if !(3..=4).contains(&parts.len()) {
        return Err(format!(
            "range `{text}` must look like lo:hi:log[:n] or lo:hi:lin:n"
        ));
    }
    let lo = parse_number(parts[0])?;
    let hi = parse_number(parts[1])?;
    if hi < lo {
        return Err(format!("range `{text}` runs backwards"));
    }
    let count = |default: Option<usize>| -> Result<usize, String> {
        match parts.get(3) {
            Some(n) => n
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| format!("point count `{n}` must be a positive integer")),
            None => default.ok_or_else(|| format!("range `{text}` needs a point count")),
        }
    };
    match parts[2].trim() {
        "log" => {
            if lo <= 0.0 {
                return Err(format!("log range `{text}` must be positive"));
            }
            let decades = (hi / lo).log10();
            let n = count(Some((decades * PER_DECADE).round() as usize + 1))?;
            Ok(spread(n, |f| {
                if f == 1.0 {
                    hi
                } else {
                    lo * 10f64.powf(decades * f)
                }
            }))
        }
        "lin" => {
            let n = count(None)?;
            Ok(spread(
                n,
                |f| if f == 1.0 { hi } else { lo + (hi - lo) * f },
            ))
        }
        other => Err(format!("unknown spacing `{other}`; use log or lin")),
    }
}

fn spread(n: usize, at: impl Fn(f64) -> f64) -> Vec<f64> {
    if n == 1 {
        return vec![at(0.0)];
    }
    (0..n).map(|i| at(i as f64 / (n - 1) as f64)).collect()
}

/// Comma-separated list of anything with a `FromStr`.
pub fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    let items = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|e| format!("bad {what} `{}`: {e}", s.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if items.is_empty() {
        return Err(format!("no {what} given"));
    }
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_grid("1e-5").unwrap(), vec![1e-5]);
        assert_eq!(parse_grid("1, 2,5").unwrap(), vec![1.0, 2.0, 5.0]);
        let g = parse_grid("1:100:log").unwrap();
        assert_eq!(g.len(), 21);
        assert_eq!((g[0], g[10], g[20]), (1.0, 10.0, 100.0));
        assert_eq!(parse_grid("1:1000:log:4").unwrap().len(), 4);
        assert_eq!(
            parse_grid("0:1:lin:5").unwrap(),
            vec![0.0, 0.25, 0.5, 0.75, 1.0]
        );
    }

    #[test]
    fn rejects() {
        for bad in [
            "",
            "x",
            "1:2",
            "2:1:log",
            "0:1:log",
            "0:1:lin",
            "1:2:cubic:3",
            "1:2:lin:0",
            "nan",
        ] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }
}
