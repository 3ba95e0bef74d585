import pytest
from hypothesis import given, settings, strategies as st

from subjsearch.querylang import (
    Comparison,
    Query,
    QueryParseError,
    parse_query,
    render_query,
)

FLAGSHIP = (
    'select * from Hotels h where price_pn <= 350 and price_pn >= 200 '
    'and "quiet" and "friendly staff"'
)


class TestParse:
    def test_flagship_query(self):
        query = parse_query(FLAGSHIP)
        assert query.relation == "hotel"
        assert query.objective == (
            Comparison("price_pn", "<=", 350.0),
            Comparison("price_pn", ">=", 200.0),
        )
        assert query.subjective == ("quiet", "friendly staff")
        assert query.limit is None

    def test_bare_select(self):
        query = parse_query("select * from Hotels")
        assert query.relation == "hotel"
        assert query.objective == ()
        assert query.subjective == ()

    def test_keywords_case_insensitive(self):
        assert parse_query("SELECT * FROM hotels WHERE \"quiet\"").subjective == ("quiet",)

    def test_alias_discarded(self):
        assert parse_query("select * from Hotels h") == parse_query("select * from Hotels")

    def test_or_rejected(self):
        with pytest.raises(QueryParseError, match="unsupported connective"):
            parse_query('select * from Hotels where "a" or "b"')

    def test_not_rejected(self):
        with pytest.raises(QueryParseError, match="unsupported connective"):
            parse_query('select * from Hotels where not "a"')

    def test_unknown_relation(self):
        with pytest.raises(QueryParseError, match="unknown relation"):
            parse_query("select * from Flights")

    def test_truncated_input_offset(self):
        with pytest.raises(QueryParseError) as excinfo:
            parse_query("select *")
        assert excinfo.value.offset == len("select *")

    def test_escaped_quote_in_predicate(self):
        query = parse_query('select * from Hotels where "say \\"hi\\""')
        assert query.subjective == ('say "hi"',)

    def test_unterminated_string(self):
        with pytest.raises(QueryParseError, match="unterminated"):
            parse_query('select * from Hotels where "oops')

    def test_contradictory_bounds_accepted(self):
        # vacuous filter is the scorer's problem, not the parser's
        query = parse_query("select * from Hotels where price_pn <= 100 and price_pn >= 200")
        assert len(query.objective) == 2


class TestRender:
    def test_single_comparison(self):
        query = Query(relation="hotel", objective=(Comparison("price_pn", "<", 100.0),))
        assert render_query(query) == "select * from Hotels where price_pn < 100"

    def test_flagship_roundtrip(self):
        query = parse_query(FLAGSHIP)
        assert parse_query(render_query(query)) == query

    def test_render_is_fixpoint(self):
        text = render_query(parse_query(FLAGSHIP))
        assert render_query(parse_query(text)) == text


predicates = st.text(
    st.characters(codec="utf-8", exclude_categories=("Cs",)), min_size=1, max_size=20
)
numbers = st.one_of(
    st.integers(min_value=0, max_value=10**9).map(float),
    st.floats(min_value=0.0, max_value=1e9, allow_nan=False, allow_infinity=False),
)
comparisons = st.builds(
    Comparison,
    attr=st.from_regex(r"[a-zA-Z_][a-zA-Z0-9_]{0,10}", fullmatch=True).filter(
        lambda s: s.lower() not in ("select", "from", "where", "and", "or", "not")
    ),
    op=st.sampled_from(["<", "<=", ">", ">=", "="]),
    value=numbers,
)
queries = st.builds(
    Query,
    relation=st.sampled_from(["hotel", "attraction", "restaurant"]),
    objective=st.lists(comparisons, max_size=4).map(tuple),
    subjective=st.lists(predicates, max_size=4).map(tuple),
    limit=st.none(),
)


@given(queries)
@settings(max_examples=300)
def test_roundtrip_property(query):
    assert parse_query(render_query(query)) == query


@given(st.binary(max_size=1024))
@settings(max_examples=300)
def test_parser_never_crashes_on_bytes(data):
    try:
        parse_query(data.decode("latin-1"))
    except QueryParseError:
        pass
