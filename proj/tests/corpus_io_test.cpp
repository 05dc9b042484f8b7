#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "centra/centra.hpp"

using namespace centra;

TEST(CorpusParse, ReadsRecords) {
  const auto records = parse_corpus(
      "{\"name\": \"S3\", \"degree\": 3, \"generators\": [[1,0,2],[1,2,0]]}\n"
      "\n"
      "{\"name\": \"trivial\", \"degree\": 2, \"generators\": []}\n");
  ASSERT_EQ(records.size(), 2U);
  EXPECT_EQ(records[0].name, "S3");
  EXPECT_EQ(records[0].degree, 3U);
  EXPECT_EQ(records[0].generators, (std::vector<std::vector<Point>>{{1, 0, 2}, {1, 2, 0}}));
  EXPECT_EQ(group_from_record(records[0]).order(), 6U);
  EXPECT_EQ(group_from_record(records[1]).order(), 1U);
}

TEST(CorpusParse, ReportsLineOfBadRecord) {
  for (const char* bad : {
           "{\"name\": \"x\", \"degree\": 3, \"generators\": [[0,0,1]]}",
           "{\"name\": \"x\", \"degree\": 3, \"generators\": [[0,1]]}",
           "{\"name\": \"x\", \"degree\": 3, \"generators\": [[0,1,3]]}",
           "{\"name\": \"x\", \"degree\": 3}",
           "{\"name\": \"x\", \"degree\": 3, \"generators\": [], \"extra\": 1}",
           "{\"name\": 5, \"degree\": 3, \"generators\": []}",
           "{\"name\": \"x\", \"degree\": -1, \"generators\": []}",
           "[1, 2, 3]",
           "{\"name\": \"x\", \"degree\": 3, \"generators\": [[1,0,2]]",
       }) {
    const std::string text = "{\"name\": \"ok\", \"degree\": 2, \"generators\": [[1,0]]}\n\n" + std::string(bad) + "\n";
    try {
      parse_corpus(text);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const CorpusParseError& e) {
      EXPECT_EQ(e.line(), 3U) << bad;
      EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
  }
}

TEST(CorpusParse, RoundTrip) {
  const CorpusRecord r{"A4 on 4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}};
  std::ostringstream out;
  write_corpus_record(out, r);
  const auto back = parse_corpus(out.str());
  ASSERT_EQ(back.size(), 1U);
  EXPECT_EQ(back[0], r);
}

namespace {

InvariantReport sample_report() {
  InvariantReport r;
  r.name = "S4, \"sym\"";
  r.order = 24;
  r.n_centralizers = 14;
  r.center_order = 1;
  r.center_index = 24;
  r.involution_count = 10;
  r.soluble = true;
  r.derived_length = 3;
  r.a_measure = 10;
  r.n_measure = std::nullopt;
  r.pyber_ratio = 0.244466;
  return r;
}

}  // namespace

TEST(Reports, InvariantJsonRoundTrip) {
  const auto r = sample_report();
  std::ostringstream out;
  write_json_line(out, r);
  const auto line = out.str();
  EXPECT_EQ(line.back(), '\n');
  const auto j = nlohmann::json::parse(line);
  EXPECT_TRUE(j["n_measure"].is_null());
  EXPECT_TRUE(j["nilpotency_class"].is_null());
  EXPECT_EQ(j["pyber_ratio"].get<double>(), 0.244466);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  auto columns = invariant_columns();
  std::sort(columns.begin(), columns.end());
  EXPECT_EQ(keys, columns);
  EXPECT_EQ(parse_invariant_report(line), r);
}

TEST(Reports, VerificationJsonRoundTrip) {
  const VerificationResult v{ClaimId::lemma_li, "D10", true, true, Status::pass, "14 ≤ 16 (2n vs |G|+|I|)"};
  std::ostringstream out;
  write_json_line(out, v);
  EXPECT_NE(out.str().find("\"status\":\"pass\""), std::string::npos);
  EXPECT_EQ(parse_verification_result(out.str()), v);
}

TEST(Reports, ColumnOrderIsFixed) {
  std::ostringstream out;
  write_json_line(out, sample_report());
  const auto line = out.str();
  std::size_t last = 0;
  for (const auto& c : invariant_columns()) {
    const auto pos = line.find("\"" + c + "\":");
    ASSERT_NE(pos, std::string::npos) << c;
    EXPECT_GE(pos, last);
    last = pos;
  }
}

TEST(Reports, CsvEscapesAndLeavesAbsentCellsEmpty) {
  std::ostringstream out;
  write_report(out, std::vector<InvariantReport>{sample_report()}, ReportFormat::csv);
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header.substr(0, 20), "name,order,n_central");
  EXPECT_EQ(row.substr(0, 22), "\"S4, \"\"sym\"\"\",24,14,1,");
  EXPECT_NE(row.find(",true,true,0.244466"), std::string::npos);
}

TEST(Reports, MixedStreamParses) {
  const auto G = group_from_spec("D10");
  const auto a = analyze(G);
  std::ostringstream out;
  write_json_line(out, a.report);
  for (const auto& v : verify_all(a)) write_json_line(out, v);
  std::istringstream in(out.str());
  const auto records = parse_report(in);
  ASSERT_EQ(records.size(), 1 + all_claims.size());
  EXPECT_EQ(std::get<InvariantReport>(records[0]), a.report);
  EXPECT_EQ(std::get<VerificationResult>(records[1]).claim, all_claims[0]);
}

TEST(Reports, RejectsMalformedReports) {
  EXPECT_THROW(parse_invariant_report("{\"name\": \"x\"}"), ReportParseError);
  EXPECT_THROW(parse_verification_result("not json"), ReportParseError);
  EXPECT_THROW(parse_verification_result(
                   "{\"claim\":\"nope\",\"group\":\"x\",\"hypothesis_held\":true,\"conclusion_held\":true,"
                   "\"status\":\"pass\",\"detail\":\"\"}"),
               ReportParseError);
}

TEST(CorpusParse, EmptyStream) { EXPECT_TRUE(parse_corpus("").empty()); }

TEST(Reports, EmptyCsvIsHeaderOnly) {
  std::ostringstream out;
  write_report(out, std::vector<VerificationResult>{}, ReportFormat::csv);
  EXPECT_EQ(out.str(), "claim,group,hypothesis_held,conclusion_held,status,detail\n");
  std::ostringstream json;
  write_report(json, std::vector<VerificationResult>{}, ReportFormat::json_lines);
  EXPECT_TRUE(json.str().empty());
}
