//! Finite monoidal categories given by explicit tables, loaded from JSON.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};

/// One morphism entry of a table file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismSpec {
    pub cod: String,
    pub dom: String,
    pub id: String,
}

/// The on-disk form of a finite category. Fields are declared in key order
/// so that saving a loaded file reproduces it byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub associator: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub associator_inv: Option<BTreeMap<String, String>>,
    pub compose: BTreeMap<String, String>,
    pub identity: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lunitor: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lunitor_inv: Option<BTreeMap<String, String>>,
    pub morphisms: Vec<MorphismSpec>,
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runitor: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runitor_inv: Option<BTreeMap<String, String>>,
    pub strict: bool,
    pub tensor_mor: BTreeMap<String, String>,
    pub tensor_obj: BTreeMap<String, String>,
    pub unit: String,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("referential error: {0}")]
    Referential(String),
    #[error("totality error: {0}")]
    Totality(String),
}

/// A morphism of a table category: its id together with its endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TableMor {
    pub id: Arc<str>,
    pub dom: Arc<str>,
    pub cod: Arc<str>,
}

impl fmt::Debug for TableMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

impl fmt::Display for TableMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

type Key2 = (Arc<str>, Arc<str>);
type Key3 = (Arc<str>, Arc<str>, Arc<str>);

#[derive(Debug, Clone, Default)]
struct Structure {
    assoc: HashMap<Key3, TableMor>,
    assoc_inv: HashMap<Key3, TableMor>,
    lunit: HashMap<Arc<str>, TableMor>,
    lunit_inv: HashMap<Arc<str>, TableMor>,
    runit: HashMap<Arc<str>, TableMor>,
    runit_inv: HashMap<Arc<str>, TableMor>,
}

/// A finite monoidal category read from a JSON table file.
#[derive(Debug, Clone)]
pub struct TableCategory {
    spec: CategorySpec,
    objects: Vec<Arc<str>>,
    morphisms: Vec<TableMor>,
    by_id: HashMap<Arc<str>, TableMor>,
    unit: Arc<str>,
    identity: HashMap<Arc<str>, TableMor>,
    compose: HashMap<Key2, TableMor>,
    tensor_obj: HashMap<Key2, Arc<str>>,
    tensor_mor: HashMap<Key2, TableMor>,
    structure: Structure,
}

fn split_key<const N: usize>(table: &str, key: &str) -> std::result::Result<[String; N], LoadError> {
    let parts: Vec<String> = key.split(',').map(|s| s.trim().to_string()).collect();
    parts.try_into().map_err(|_| {
        LoadError::Referential(format!("{table}: key `{key}` should have {N} comma-separated ids"))
    })
}

struct Builder<'a> {
    objects: HashMap<&'a str, Arc<str>>,
    by_id: HashMap<Arc<str>, TableMor>,
}

impl Builder<'_> {
    fn obj(&self, table: &str, id: &str) -> std::result::Result<Arc<str>, LoadError> {
        self.objects
            .get(id)
            .cloned()
            .ok_or_else(|| LoadError::Referential(format!("{table}: unknown object `{id}`")))
    }

    fn mor(&self, table: &str, id: &str) -> std::result::Result<TableMor, LoadError> {
        self.by_id
            .get(id)
            .cloned()
            .ok_or_else(|| LoadError::Referential(format!("{table}: unknown morphism `{id}`")))
    }

    fn typed(
        &self,
        table: &str,
        key: &str,
        id: &str,
        dom: &str,
        cod: &str,
    ) -> std::result::Result<TableMor, LoadError> {
        let m = self.mor(table, id)?;
        if &*m.dom != dom || &*m.cod != cod {
            return Err(LoadError::Referential(format!(
                "{table}[{key}] = {id} has type {} -> {}, expected {dom} -> {cod}",
                m.dom, m.cod
            )));
        }
        Ok(m)
    }
}

impl TableCategory {
    pub fn load(path: impl AsRef<Path>) -> std::result::Result<Self, LoadError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, LoadError> {
        let spec: CategorySpec = serde_json::from_str(text)?;
        Self::from_spec(spec)
    }

    pub fn spec(&self) -> &CategorySpec {
        &self.spec
    }

    /// The canonical file text: pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.spec).expect("spec serializes");
        text.push('\n');
        text
    }

    pub fn save(&self, path: impl AsRef<Path>) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }

    pub fn from_spec(spec: CategorySpec) -> std::result::Result<Self, LoadError> {
        let mut b = Builder {
            objects: HashMap::new(),
            by_id: HashMap::new(),
        };
        let mut objects = Vec::new();
        for o in &spec.objects {
            if o.contains(',') || o.is_empty() {
                return Err(LoadError::Referential(format!("bad object id `{o}`")));
            }
            let id: Arc<str> = Arc::from(o.as_str());
            if b.objects.insert(o.as_str(), id.clone()).is_some() {
                return Err(LoadError::Referential(format!("duplicate object `{o}`")));
            }
            objects.push(id);
        }
        let unit = b.obj("unit", &spec.unit)?;

        let mut morphisms = Vec::new();
        for m in &spec.morphisms {
            if m.id.contains(',') || m.id.is_empty() {
                return Err(LoadError::Referential(format!("bad morphism id `{}`", m.id)));
            }
            let mor = TableMor {
                id: Arc::from(m.id.as_str()),
                dom: b.obj("morphisms", &m.dom)?,
                cod: b.obj("morphisms", &m.cod)?,
            };
            if b.by_id.insert(mor.id.clone(), mor.clone()).is_some() {
                return Err(LoadError::Referential(format!("duplicate morphism `{}`", m.id)));
            }
            morphisms.push(mor);
        }

        let mut tensor_obj = HashMap::new();
        for (key, value) in &spec.tensor_obj {
            let [x, y] = split_key::<2>("tensor_obj", key)?;
            let k = (b.obj("tensor_obj", &x)?, b.obj("tensor_obj", &y)?);
            tensor_obj.insert(k, b.obj("tensor_obj", value)?);
        }
        for x in &objects {
            for y in &objects {
                if !tensor_obj.contains_key(&(x.clone(), y.clone())) {
                    return Err(LoadError::Totality(format!("tensor_obj missing `{x},{y}`")));
                }
            }
        }

        let mut identity = HashMap::new();
        for (key, value) in &spec.identity {
            let x = b.obj("identity", key)?;
            identity.insert(x.clone(), b.typed("identity", key, value, &x, &x)?);
        }
        for x in &objects {
            if !identity.contains_key(x) {
                return Err(LoadError::Totality(format!("identity missing `{x}`")));
            }
        }

        let mut compose = HashMap::new();
        for (key, value) in &spec.compose {
            let [g, f] = split_key::<2>("compose", key)?;
            let (g, f) = (b.mor("compose", &g)?, b.mor("compose", &f)?);
            if f.cod != g.dom {
                return Err(LoadError::Referential(format!(
                    "compose[{key}]: {} is not composable after {}",
                    g.id, f.id
                )));
            }
            let h = b.typed("compose", key, value, &f.dom, &g.cod)?;
            compose.insert((g.id.clone(), f.id.clone()), h);
        }
        for g in &morphisms {
            for f in &morphisms {
                if f.cod == g.dom && !compose.contains_key(&(g.id.clone(), f.id.clone())) {
                    return Err(LoadError::Totality(format!(
                        "compose missing `{},{}`",
                        g.id, f.id
                    )));
                }
            }
        }

        let mut tensor_mor = HashMap::new();
        for (key, value) in &spec.tensor_mor {
            let [f, g] = split_key::<2>("tensor_mor", key)?;
            let (f, g) = (b.mor("tensor_mor", &f)?, b.mor("tensor_mor", &g)?);
            let dom = &tensor_obj[&(f.dom.clone(), g.dom.clone())];
            let cod = &tensor_obj[&(f.cod.clone(), g.cod.clone())];
            let h = b.typed("tensor_mor", key, value, dom, cod)?;
            tensor_mor.insert((f.id.clone(), g.id.clone()), h);
        }
        for f in &morphisms {
            for g in &morphisms {
                if !tensor_mor.contains_key(&(f.id.clone(), g.id.clone())) {
                    return Err(LoadError::Totality(format!(
                        "tensor_mor missing `{},{}`",
                        f.id, g.id
                    )));
                }
            }
        }

        let mut cat = TableCategory {
            spec: spec.clone(),
            objects,
            morphisms,
            by_id: b.by_id.clone(),
            unit,
            identity,
            compose,
            tensor_obj,
            tensor_mor,
            structure: Structure::default(),
        };
        cat.structure = cat.load_structure(&b, &spec)?;
        Ok(cat)
    }

    fn load_structure(
        &self,
        b: &Builder<'_>,
        spec: &CategorySpec,
    ) -> std::result::Result<Structure, LoadError> {
        let t = |x: &Arc<str>, y: &Arc<str>| self.tensor_obj[&(x.clone(), y.clone())].clone();
        let u = &self.unit;
        let mut s = Structure::default();

        let triples: Vec<Key3> = self
            .objects
            .iter()
            .flat_map(|x| {
                self.objects.iter().flat_map(move |y| {
                    self.objects
                        .iter()
                        .map(move |z| (x.clone(), y.clone(), z.clone()))
                })
            })
            .collect();

        let table3 = |name: &str,
                      map: &Option<BTreeMap<String, String>>,
                      forward: bool|
         -> std::result::Result<HashMap<Key3, TableMor>, LoadError> {
            let mut out = HashMap::new();
            let ends = |k: &Key3| {
                let left = t(&t(&k.0, &k.1), &k.2);
                let right = t(&k.0, &t(&k.1, &k.2));
                if forward {
                    (left, right)
                } else {
                    (right, left)
                }
            };
            match map {
                Some(map) => {
                    for (key, value) in map {
                        let [x, y, z] = split_key::<3>(name, key)?;
                        let k = (b.obj(name, &x)?, b.obj(name, &y)?, b.obj(name, &z)?);
                        let (dom, cod) = ends(&k);
                        out.insert(k, b.typed(name, key, value, &dom, &cod)?);
                    }
                    for k in &triples {
                        if !out.contains_key(k) {
                            return Err(LoadError::Totality(format!(
                                "{name} missing `{},{},{}`",
                                k.0, k.1, k.2
                            )));
                        }
                    }
                }
                None if spec.strict => {
                    for k in &triples {
                        let (dom, cod) = ends(k);
                        if dom != cod {
                            return Err(LoadError::Totality(format!(
                                "{name} omitted but {dom} != {cod} at `{},{},{}`",
                                k.0, k.1, k.2
                            )));
                        }
                        out.insert(k.clone(), self.identity[&dom].clone());
                    }
                }
                None => return Err(LoadError::Totality(format!("missing table `{name}`"))),
            }
            Ok(out)
        };
        s.assoc = table3("associator", &spec.associator, true)?;
        s.assoc_inv = table3("associator_inv", &spec.associator_inv, false)?;

        let table1 = |name: &str,
                      map: &Option<BTreeMap<String, String>>,
                      tensored: &dyn Fn(&Arc<str>) -> Arc<str>,
                      forward: bool|
         -> std::result::Result<HashMap<Arc<str>, TableMor>, LoadError> {
            let mut out = HashMap::new();
            let ends = |x: &Arc<str>| {
                if forward {
                    (tensored(x), x.clone())
                } else {
                    (x.clone(), tensored(x))
                }
            };
            match map {
                Some(map) => {
                    for (key, value) in map {
                        let x = b.obj(name, key)?;
                        let (dom, cod) = ends(&x);
                        out.insert(x, b.typed(name, key, value, &dom, &cod)?);
                    }
                    for x in &self.objects {
                        if !out.contains_key(x) {
                            return Err(LoadError::Totality(format!("{name} missing `{x}`")));
                        }
                    }
                }
                None if spec.strict => {
                    for x in &self.objects {
                        let (dom, cod) = ends(x);
                        if dom != cod {
                            return Err(LoadError::Totality(format!(
                                "{name} omitted but {dom} != {cod}"
                            )));
                        }
                        out.insert(x.clone(), self.identity[x].clone());
                    }
                }
                None => return Err(LoadError::Totality(format!("missing table `{name}`"))),
            }
            Ok(out)
        };
        let left = |x: &Arc<str>| t(u, x);
        let right = |x: &Arc<str>| t(x, u);
        s.lunit = table1("lunitor", &spec.lunitor, &left, true)?;
        s.lunit_inv = table1("lunitor_inv", &spec.lunitor_inv, &left, false)?;
        s.runit = table1("runitor", &spec.runitor, &right, true)?;
        s.runit_inv = table1("runitor_inv", &spec.runitor_inv, &right, false)?;
        Ok(s)
    }

    pub fn object(&self, id: &str) -> Result<Arc<str>> {
        self.objects
            .iter()
            .find(|o| &***o == id)
            .cloned()
            .ok_or_else(|| CatError::UnknownObject(id.to_string()))
    }

    pub fn morphism(&self, id: &str) -> Result<TableMor> {
        self.by_id
            .get(id)
            .cloned()
            .ok_or_else(|| CatError::UnknownMorphism(id.to_string()))
    }

    fn lookup<K: std::hash::Hash + Eq, V: Clone>(
        map: &HashMap<K, V>,
        key: &K,
        what: impl FnOnce() -> String,
    ) -> Result<V> {
        map.get(key).cloned().ok_or_else(|| CatError::MissingEntry(what()))
    }
}

impl MonoidalCategory for TableCategory {
    type Obj = Arc<str>;
    type Mor = TableMor;

    fn dom(&self, f: &TableMor) -> Arc<str> {
        f.dom.clone()
    }
    fn cod(&self, f: &TableMor) -> Arc<str> {
        f.cod.clone()
    }
    fn identity(&self, x: &Arc<str>) -> Result<TableMor> {
        Self::lookup(&self.identity, x, || format!("identity `{x}`"))
    }
    fn compose(&self, g: &TableMor, f: &TableMor) -> Result<TableMor> {
        if f.cod != g.dom {
            return Err(CatError::NotComposable {
                g: g.id.to_string(),
                f: f.id.to_string(),
                cod: f.cod.to_string(),
                dom: g.dom.to_string(),
            });
        }
        Self::lookup(&self.compose, &(g.id.clone(), f.id.clone()), || {
            format!("compose `{},{}`", g.id, f.id)
        })
    }
    fn mor_eq(&self, f: &TableMor, g: &TableMor) -> bool {
        f.id == g.id
    }
    fn unit(&self) -> Arc<str> {
        self.unit.clone()
    }
    fn tensor_obj(&self, x: &Arc<str>, y: &Arc<str>) -> Result<Arc<str>> {
        Self::lookup(&self.tensor_obj, &(x.clone(), y.clone()), || {
            format!("tensor_obj `{x},{y}`")
        })
    }
    fn tensor_mor(&self, f: &TableMor, g: &TableMor) -> Result<TableMor> {
        Self::lookup(&self.tensor_mor, &(f.id.clone(), g.id.clone()), || {
            format!("tensor_mor `{},{}`", f.id, g.id)
        })
    }
    fn associator(&self, x: &Arc<str>, y: &Arc<str>, z: &Arc<str>) -> Result<TableMor> {
        let key = (x.clone(), y.clone(), z.clone());
        Self::lookup(&self.structure.assoc, &key, || format!("associator `{x},{y},{z}`"))
    }
    fn associator_inv(&self, x: &Arc<str>, y: &Arc<str>, z: &Arc<str>) -> Result<TableMor> {
        let key = (x.clone(), y.clone(), z.clone());
        Self::lookup(&self.structure.assoc_inv, &key, || {
            format!("associator_inv `{x},{y},{z}`")
        })
    }
    fn lunitor(&self, x: &Arc<str>) -> Result<TableMor> {
        Self::lookup(&self.structure.lunit, x, || format!("lunitor `{x}`"))
    }
    fn lunitor_inv(&self, x: &Arc<str>) -> Result<TableMor> {
        Self::lookup(&self.structure.lunit_inv, x, || format!("lunitor_inv `{x}`"))
    }
    fn runitor(&self, x: &Arc<str>) -> Result<TableMor> {
        Self::lookup(&self.structure.runit, x, || format!("runitor `{x}`"))
    }
    fn runitor_inv(&self, x: &Arc<str>) -> Result<TableMor> {
        Self::lookup(&self.structure.runit_inv, x, || format!("runitor_inv `{x}`"))
    }
    fn is_strict(&self) -> bool {
        self.spec.strict
    }
    fn objects(&self) -> Option<Vec<Arc<str>>> {
        Some(self.objects.clone())
    }
    fn morphisms(&self) -> Option<Vec<TableMor>> {
        Some(self.morphisms.clone())
    }
    fn obj_label(&self, x: &Arc<str>) -> String {
        x.to_string()
    }
    fn mor_label(&self, f: &TableMor) -> String {
        f.id.to_string()
    }
}
