#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "npo/refdata.hpp"

namespace {

const std::vector<npo::ReferenceEntry>& corpus() {
  static const auto entries = npo::embedded_corpus();
  return entries;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string header() { return std::string(npo::kCorpusHeader) + "\n"; }

TEST(Corpus, TableCounts) {
  std::map<std::string, int> counts;
  for (const auto& e : corpus()) ++counts[e.table];
  EXPECT_EQ(counts, npo::expected_table_counts());
  EXPECT_EQ(counts.at("I"), 8);
  EXPECT_EQ(corpus().size(), 216u);
}

TEST(Corpus, ExactEntry) {
  int found = 0;
  for (const auto& e : corpus())
    if (e.table == "I" && e.g == 0.1 && e.lambda == -0.5 && e.n_r == 0 &&
        e.l == 1) {
      EXPECT_EQ(e.value, 4.0);
      EXPECT_TRUE(e.exact);
      ++found;
    }
  EXPECT_EQ(found, 1);
  for (const auto& e : corpus()) {
    EXPECT_EQ(e.exact, e.table == "I");
    EXPECT_GE(e.digits, 6);
    EXPECT_EQ(e.r_max, e.table == "III" ? 300.0 : 150.0);
  }
}

TEST(Corpus, ShippedFileMatchesEmbeddedCopy) {
  const auto text = read_file(std::string(NPO_SOURCE_DIR) + "/data/reference_corpus.csv");
  EXPECT_EQ(text, std::string(npo::kEmbeddedCorpus));
  EXPECT_EQ(npo::fnv1a64(text), npo::kEmbeddedCorpusChecksum);
  const auto from_file =
      npo::load_corpus_file(std::string(NPO_SOURCE_DIR) + "/data/reference_corpus.csv");
  EXPECT_EQ(from_file.size(), corpus().size());
}

TEST(Corpus, ChecksumDetectsEdits) {
  std::string text(npo::kEmbeddedCorpus);
  const auto pos = text.find("2.4,13");
  ASSERT_NE(pos, std::string::npos);
  text[pos + 2] = '5';
  EXPECT_NE(npo::fnv1a64(text), npo::kEmbeddedCorpusChecksum);
}

TEST(Corpus, EmptyInputIsAnError) {
  EXPECT_THROW(npo::load_corpus(""), npo::ParseError);
  EXPECT_THROW(npo::load_corpus("\n\n", false), npo::ParseError);
}

TEST(Corpus, MalformedRowsReportLine) {
  auto expect_line = [](const std::string& text, const std::string& needle) {
    try {
      npo::load_corpus(text, false);
      FAIL() << "accepted: " << text;
    } catch (const npo::ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  expect_line(header() + "I,0.1,-0.46,0,0,2.4,13,150,1\nI,0.1,oops,0,0,2.4,13,150,1\n",
              "line 3");
  expect_line(header() + "I,0.1,-0.46,0,0,2.4,13,150\n", "line 2");
  expect_line(header() + "VI,0.1,-0.46,0,0,2.4,13,150,1\n", "line 2");
  expect_line(header() + "II,0.1,0.1,0,1,5.18,3,150,0\n", "line 2");
  expect_line(header() + "V,0.1,-1,5,2,0.2,6,150,0\n", "line 2");
  expect_line("bad header\n", "line 1");
}

TEST(Corpus, CountsEnforced) {
  const auto partial = header() + "I,0.1,-0.46,0,0,2.4,13,150,1\n";
  EXPECT_THROW(npo::load_corpus(partial), npo::ParseError);
  EXPECT_EQ(npo::load_corpus(partial, false).size(), 1u);
}

TEST(Tolerances, PerTable) {
  npo::ReferenceEntry e;
  e.table = "I";
  e.exact = true;
  e.value = -133;
  EXPECT_EQ(npo::tolerance_for(e), 1e-9);
  e.table = "IV";
  e.exact = false;
  EXPECT_NEAR(npo::tolerance_for(e), 133e-8, 1e-20);
  e.table = "V";
  EXPECT_EQ(npo::tolerance_for(e), 2e-6);
}

TEST(Validate, DocumentedExamples) {
  auto entries = npo::load_corpus(header() +
                                  "I,1,-10,0,0,-3,12,150,1\n"
                                  "II,100,100,0,3,9.997153638476,12,150,0\n"
                                  "V,0.1,-1,1,2,0.212252,6,150,0\n",
                                  false);
  const auto report = npo::validate(entries);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.failures(), 0) << report.to_text();
  EXPECT_NEAR(report.rows[0].computed, -3.0, 1e-9);
  EXPECT_NEAR(report.rows[1].computed / 9.997153638476, 1.0, 1e-8);
  EXPECT_NEAR(report.rows[2].computed, 0.212252, 2e-6);
}

TEST(Validate, DetectsWrongValue) {
  auto entries =
      npo::load_corpus(header() + "II,100,100,0,3,9.997154,12,150,0\n", false);
  const auto report = npo::validate(entries);
  EXPECT_EQ(report.failures(), 1);
  EXPECT_NE(report.to_text().find("FAIL table II"), std::string::npos);
  EXPECT_NE(report.to_csv().find(",0\n"), std::string::npos);
}

TEST(Validate, FullCorpus) {
  const auto report = npo::validate(corpus());
  ASSERT_EQ(report.rows.size(), 216u);
  // Only the printed misprints disagree.
  int misprints = 0;
  for (const auto& r : report.rows) {
    if (r.pass) continue;
    EXPECT_NE(npo::find_erratum(r.entry), nullptr)
        << "unexplained failure: " << r.entry.table << " g=" << r.entry.g
        << " lambda=" << r.entry.lambda << " nr=" << r.entry.n_r
        << " l=" << r.entry.l << " computed=" << r.computed;
    ++misprints;
  }
  EXPECT_EQ(misprints, 8);
  for (const auto& t : {"I", "II", "IV"})
    for (const auto& r : report.for_table(t)) EXPECT_TRUE(r.pass);

  const auto corrected = npo::validate(npo::apply_errata(corpus()));
  EXPECT_EQ(corrected.rows.size(), 215u);
  EXPECT_EQ(corrected.failures(), 0) << corrected.to_text();
}

TEST(Validate, ReportIsDeterministic) {
  const auto entries = npo::apply_errata(corpus());
  const auto a = npo::validate(entries, {}, 1);
  const auto b = npo::validate(entries, {}, 4);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.to_csv().substr(0, a.to_csv().find('\n')),
            "table,g,lambda,nr,l,computed,reference,absdiff,pass");
}

TEST(Errata, Behaviour) {
  EXPECT_EQ(npo::known_errata().size(), 8u);
  const auto fixed = npo::apply_errata(corpus());
  int moved = 0;
  for (const auto& e : fixed) {
    EXPECT_FALSE(e.table == "III" && e.g == 0.5 && e.l == 20);
    EXPECT_FALSE(e.table == "V" && e.g == 1000 && e.lambda == -100 && e.n_r == 7);
    if (e.table == "III" && e.g == 0.1 && e.lambda == 500 && e.l == 20) ++moved;
  }
  EXPECT_EQ(moved, 5);
}

}  // namespace
