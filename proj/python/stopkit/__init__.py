"""Stopword list construction and category-coverage validation."""

from stopkit._core import (  # noqa: F401
    CategorizedCorpus,
    CategoryVocabulary,
    Classification,
    CoverageReport,
    Document,
    FormatError,
    FoundRecord,
    ListDiff,
    ListSizes,
    Manifest,
    NormPolicy,
    PipelineResult,
    PosCorpus,
    PosToken,
    Ratio,
    SemanticError,
    StopwordList,
    TermStats,
    VocabSummary,
    analyze_coverage,
    build_category_vocabulary,
    classify_stopwords,
    compute_term_stats,
    coverage_report_from_json,
    detection_rate,
    diff_lists,
    extract_pos_stopwords,
    merge_lists,
    normalize_list,
    normalize_word,
    parse_categorized_corpus,
    parse_conllu,
    rank_candidates,
    read_categorized_corpus_file,
    read_conllu_files,
    read_manifest_file,
    read_stopword_list_file,
    render_table2,
    render_table3,
    render_table4,
    run_pipeline,
    summarize_vocabulary,
    tokenize,
    write_pipeline_outputs,
    write_stopword_list_file,
)

__version__ = "0.1.0"
