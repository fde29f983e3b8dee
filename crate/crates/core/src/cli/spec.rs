//! Graph specifications on the command line: `catalog:name[:p1,p2]`,
//! `srg:n,k,l,m`, `group:kind:n[:class]`, `product:n,copies`, inline JSON or
//! a path to a JSON file.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::group::GroupDescriptor;
use crate::scheme::{IntersectionArray, SchemeSpec};
use crate::spectral::{catalog, srg_intersection_array};

fn schema(pointer: &str, message: impl Into<String>) -> Error {
    Error::SchemaError {
        pointer: pointer.to_string(),
        message: message.into(),
    }
}

fn integers(text: &str, what: &str) -> Result<Vec<i64>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::BadParams(format!("{what}: `{p}` is not an integer")))
        })
        .collect()
}

fn unsigned(values: &[i64], what: &str) -> Result<Vec<u64>> {
    values
        .iter()
        .map(|&v| u64::try_from(v).map_err(|_| Error::BadParams(format!("{what}: {v} is negative"))))
        .collect()
}

/// Checks the spec's own constraints so that a bad spec is rejected before
/// any computation starts.
fn validated(spec: SchemeSpec) -> Result<SchemeSpec> {
    match &spec {
        SchemeSpec::FromGroup { group, .. } => group.validate()?,
        SchemeSpec::FromSrg { n, k, lambda, mu } => {
            srg_intersection_array(*n, *k, *lambda, *mu)?;
        }
        SchemeSpec::Catalog { name, params } => {
            catalog(name, params)?;
        }
        SchemeSpec::Product { n, copies } => {
            if *n < 2 || *copies < 1 {
                return Err(Error::BadParams(format!(
                    "product needs n >= 2 and copies >= 1, got {n}, {copies}"
                )));
            }
        }
        SchemeSpec::FromIntersectionArray(_) => {}
    }
    Ok(spec)
}

fn parse_token(text: &str) -> Result<Option<SchemeSpec>> {
    let Some((kind, rest)) = text.split_once(':') else {
        return Ok(None);
    };
    let spec = match kind {
        "catalog" => {
            let (name, params) = rest.split_once(':').unwrap_or((rest, ""));
            SchemeSpec::Catalog {
                name: name.to_string(),
                params: integers(params, name)?,
            }
        }
        "srg" => match unsigned(&integers(rest, "srg")?, "srg")?[..] {
            [n, k, lambda, mu] => SchemeSpec::FromSrg { n, k, lambda, mu },
            _ => return Err(Error::BadParams("srg takes n,k,lambda,mu".into())),
        },
        "product" => match unsigned(&integers(rest, "product")?, "product")?[..] {
            [n, copies] => SchemeSpec::Product { n, copies },
            _ => return Err(Error::BadParams("product takes n,copies".into())),
        },
        "group" => {
            let mut parts = rest.split(':');
            let kind = parts.next().unwrap_or_default();
            let n = parts
                .next()
                .and_then(|n| n.parse::<u32>().ok())
                .ok_or_else(|| Error::BadParams("group takes kind:n[:class]".into()))?;
            let class = match parts.next() {
                Some(c) => Some(
                    c.parse::<usize>()
                        .map_err(|_| Error::BadParams(format!("class `{c}` is not an index")))?,
                ),
                None => None,
            };
            if parts.next().is_some() {
                return Err(Error::BadParams("group takes kind:n[:class]".into()));
            }
            SchemeSpec::FromGroup {
                group: GroupDescriptor::new(kind, n)?,
                class,
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(spec))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(&format!("/{key}"), "missing field"))
}

fn uint(obj: &Map<String, Value>, key: &str) -> Result<u64> {
    field(obj, key)?
        .as_u64()
        .ok_or_else(|| schema(&format!("/{key}"), "expected a nonnegative integer"))
}

fn uint_list(obj: &Map<String, Value>, key: &str) -> Result<Vec<u64>> {
    let Value::Array(items) = field(obj, key)? else {
        return Err(schema(&format!("/{key}"), "expected an array"));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_u64()
                .ok_or_else(|| schema(&format!("/{key}/{i}"), "expected a nonnegative integer"))
        })
        .collect()
}

fn parse_json(text: &str) -> Result<SchemeSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| schema("", e.to_string()))?;
    let Value::Object(obj) = value else {
        return Err(schema("", "expected an object"));
    };
    let kind = field(&obj, "kind")?
        .as_str()
        .ok_or_else(|| schema("/kind", "expected a string"))?;
    let allowed: &[&str] = match kind {
        "intersection_array" => &["kind", "d", "c_forward", "b_backward"],
        "group" => &["kind", "group", "n", "class"],
        "srg" => &["kind", "n", "k", "lambda", "mu"],
        "product" => &["kind", "n", "copies"],
        "catalog" => &["kind", "name", "params"],
        other => return Err(schema("/kind", format!("unknown kind `{other}`"))),
    };
    if let Some(extra) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(schema(&format!("/{extra}"), "unknown field"));
    }
    match kind {
        "intersection_array" => {
            let d = uint(&obj, "d")? as usize;
            let (c, b) = (uint_list(&obj, "c_forward")?, uint_list(&obj, "b_backward")?);
            if c.len() != d {
                return Err(schema("/c_forward", format!("expected {d} entries")));
            }
            if b.len() != d {
                return Err(schema("/b_backward", format!("expected {d} entries")));
            }
            Ok(SchemeSpec::FromIntersectionArray(IntersectionArray::new(c, b)?))
        }
        "group" => {
            let name = field(&obj, "group")?
                .as_str()
                .ok_or_else(|| schema("/group", "expected a string"))?;
            let n = u32::try_from(uint(&obj, "n")?).map_err(|_| schema("/n", "out of range"))?;
            let class = match obj.get("class") {
                None | Some(Value::Null) => None,
                Some(v) => Some(v.as_u64().ok_or_else(|| schema("/class", "expected a class index"))? as usize),
            };
            let group = GroupDescriptor::new(name, n).map_err(|e| match e {
                Error::BadParams(m) => schema("/group", m),
                other => other,
            })?;
            Ok(SchemeSpec::FromGroup { group, class })
        }
        "srg" => Ok(SchemeSpec::FromSrg {
            n: uint(&obj, "n")?,
            k: uint(&obj, "k")?,
            lambda: uint(&obj, "lambda")?,
            mu: uint(&obj, "mu")?,
        }),
        "product" => Ok(SchemeSpec::Product {
            n: uint(&obj, "n")?,
            copies: uint(&obj, "copies")?,
        }),
        _ => {
            let name = field(&obj, "name")?
                .as_str()
                .ok_or_else(|| schema("/name", "expected a string"))?;
            let params = match obj.get("params") {
                None => Vec::new(),
                Some(Value::Array(items)) => items
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        v.as_i64()
                            .ok_or_else(|| schema(&format!("/params/{i}"), "expected an integer"))
                    })
                    .collect::<Result<_>>()?,
                Some(_) => return Err(schema("/params", "expected an array")),
            };
            Ok(SchemeSpec::Catalog {
                name: name.to_string(),
                params,
            })
        }
    }
}

/// Parses a token, inline JSON or JSON file into a validated spec.
pub fn parse_graph_spec(text: &str) -> Result<SchemeSpec> {
    let text = text.trim();
    if text.starts_with('{') {
        return validated(parse_json(text)?);
    }
    if let Some(spec) = parse_token(text)? {
        return validated(spec);
    }
    let body = std::fs::read_to_string(text).map_err(|e| Error::Io(format!("{text}: {e}")))?;
    validated(parse_json(&body)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        assert_eq!(
            parse_graph_spec("catalog:cycle:9")
                .unwrap()
                .intersection_array()
                .unwrap(),
            IntersectionArray::new(vec![2, 1, 1, 1], vec![1, 1, 1, 1]).unwrap()
        );
        assert_eq!(
            parse_graph_spec("srg:10,3,0,1").unwrap(),
            SchemeSpec::FromSrg {
                n: 10,
                k: 3,
                lambda: 0,
                mu: 1
            }
        );
        assert_eq!(
            parse_graph_spec("group:dihedral:6:3").unwrap(),
            SchemeSpec::FromGroup {
                group: GroupDescriptor::Dihedral(6),
                class: Some(3)
            }
        );
        assert!(matches!(
            parse_graph_spec("catalog:nope"),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!(matches!(
            parse_graph_spec("srg:10,3,0,2"),
            Err(Error::InfeasibleParameters(_))
        ));
    }

    #[test]
    fn json() {
        assert_eq!(
            parse_graph_spec(r#"{"kind":"group","group":"symmetric","n":4}"#).unwrap(),
            SchemeSpec::FromGroup {
                group: GroupDescriptor::Symmetric(4),
                class: None
            }
        );
        let ia =
            parse_graph_spec(r#"{"kind":"intersection_array","d":2,"c_forward":[3,2],"b_backward":[1,1]}"#).unwrap();
        assert_eq!(ia.intersection_array().unwrap().c_forward(), &[3, 2]);
        let pointer = |text: &str| match parse_graph_spec(text) {
            Err(Error::SchemaError { pointer, .. }) => pointer,
            other => panic!("{other:?}"),
        };
        assert_eq!(pointer(r#"{"kind":"srg","n":10,"k":3,"lambda":0,"mu":1,"x":1}"#), "/x");
        assert_eq!(
            pointer(r#"{"kind":"intersection_array","d":2,"c_forward":[3,-2],"b_backward":[1,1]}"#),
            "/c_forward/1"
        );
        assert_eq!(pointer(r#"{"kind":"catalog""#), "");
        assert_eq!(pointer(r#"{"kind":"group","group":"alternating","n":4}"#), "/group");
    }
}
