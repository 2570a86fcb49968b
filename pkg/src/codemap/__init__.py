"""Cross-language code mapping through shared token embeddings.

Pipeline: pair source files across two language trees, normalize them into
enriched token streams, learn token alignments, train bilingual skip-gram
embeddings, compose element-level vectors, and retrieve cross-language
mappings.
"""

__version__ = "0.1.0"
