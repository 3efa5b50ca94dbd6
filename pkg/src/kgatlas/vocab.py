"""Well-known vocabulary IRIs used across the package."""

from .terms import Iri

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

# Annotation vocabulary this tool reads for icons and text provenance.
VIZ_NS = "http://kg-atlas.dev/viz#"

RDF_TYPE = Iri(RDF_NS + "type")
RDF_LANGSTRING = Iri(RDF_NS + "langString")

RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_SUBCLASSOF = Iri(RDFS_NS + "subClassOf")
RDFS_DOMAIN = Iri(RDFS_NS + "domain")
RDFS_RANGE = Iri(RDFS_NS + "range")

OWL_CLASS = Iri(OWL_NS + "Class")
OWL_OBJECT_PROPERTY = Iri(OWL_NS + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL_NS + "DatatypeProperty")

XSD_STRING = Iri(XSD_NS + "string")
XSD_INTEGER = Iri(XSD_NS + "integer")
XSD_DECIMAL = Iri(XSD_NS + "decimal")
XSD_DOUBLE = Iri(XSD_NS + "double")
XSD_BOOLEAN = Iri(XSD_NS + "boolean")

VIZ_ICON = Iri(VIZ_NS + "icon")
VIZ_SOURCE_SPAN = Iri(VIZ_NS + "sourceSpan")
VIZ_DOC = Iri(VIZ_NS + "doc")
VIZ_BEGIN = Iri(VIZ_NS + "begin")
VIZ_END = Iri(VIZ_NS + "end")
