#include "zagreb/qspr.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace {

using zagreb::DataPoint;
using zagreb::Property;
using zagreb::PropertyDataset;
using zagreb::RegressionModel;

TEST(BuiltinDataset, RowsAsTabulated) {
  const PropertyDataset dataset = zagreb::builtin_acene_dataset();
  ASSERT_EQ(dataset.records.size(), 8u);

  EXPECT_EQ(dataset.records[0],
            (zagreb::PropertyRecord{"C10H8", 2, 432, 80.83, 121.68, -0.32,
                                    4.09}));
  EXPECT_EQ(dataset.records[6].hof, 633.07);  // kept verbatim, flagged
  EXPECT_EQ(dataset.records[7],
            (zagreb::PropertyRecord{"C36H22", 9, 2812, 760.11, 1036.58, 0.84,
                                    3.36}));

  for (const zagreb::PropertyRecord& r : dataset.records)
    EXPECT_EQ(r.ehm, 340ll * r.rings - 248);
}

TEST(BuiltinDataset, FlagsTheSuspectCells) {
  const std::vector<zagreb::DatasetFlag>& flags =
      zagreb::builtin_dataset_flags();
  ASSERT_EQ(flags.size(), 2u);
  EXPECT_EQ(flags[0].row, 7);
  EXPECT_EQ(flags[0].field, "hof");
  EXPECT_EQ(flags[1].row, 8);
  EXPECT_EQ(flags[1].field, "formula");
  EXPECT_NE(flags[1].note.find("C38H22"), std::string::npos);
}

TEST(DatasetCsv, SerializeParseRoundTrip) {
  const PropertyDataset dataset = zagreb::builtin_acene_dataset();
  const std::string text = zagreb::serialize_dataset_csv(dataset);
  EXPECT_EQ(zagreb::parse_dataset_csv(text), dataset);
}

TEST(DatasetCsv, AcceptsTheEhmlessHeader) {
  const std::string text =
      "formula,n,hof_kj_mol,ge_kj_mol,eg,eea\n"
      "C10H8,2,80.83,121.68,-0.32,4.09\n"
      "C14H10,3,177.87,252.38,-0.05,4.19\n";
  const PropertyDataset dataset = zagreb::parse_dataset_csv(text);
  ASSERT_EQ(dataset.records.size(), 2u);
  EXPECT_EQ(dataset.records[0].ehm, 432);  // recomputed from n
  EXPECT_EQ(dataset.records[1].ehm, 772);
}

TEST(DatasetCsv, RejectsEhmInconsistency) {
  const std::string text =
      "formula,n,ehm,hof_kj_mol,ge_kj_mol,eg,eea\n"
      "C10H8,2,431,80.83,121.68,-0.32,4.09\n"
      "C14H10,3,772,177.87,252.38,-0.05,4.19\n";
  try {
    zagreb::parse_dataset_csv(text);
    FAIL() << "expected QsprError";
  } catch (const zagreb::QsprError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("row 1"), std::string::npos);
    EXPECT_NE(what.find("ehm"), std::string::npos);
  }
}

TEST(DatasetCsv, RejectsBadInputs) {
  // header mismatch
  EXPECT_THROW(zagreb::parse_dataset_csv("formula,rings,ehm\n"),
               zagreb::QsprError);
  // too few records
  EXPECT_THROW(
      zagreb::parse_dataset_csv("formula,n,ehm,hof_kj_mol,ge_kj_mol,eg,eea\n"),
      zagreb::QsprError);
  EXPECT_THROW(zagreb::parse_dataset_csv(
                   "formula,n,ehm,hof_kj_mol,ge_kj_mol,eg,eea\n"
                   "C10H8,2,432,80.83,121.68,-0.32,4.09\n"),
               zagreb::QsprError);
  // non-numeric cell, reported with its row
  try {
    zagreb::parse_dataset_csv(
        "formula,n,ehm,hof_kj_mol,ge_kj_mol,eg,eea\n"
        "C10H8,2,432,80.83,121.68,-0.32,4.09\n"
        "C14H10,3,772,177.87,252.38,abc,4.19\n");
    FAIL() << "expected QsprError";
  } catch (const zagreb::QsprError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("row 2"), std::string::npos);
    EXPECT_NE(what.find("eg"), std::string::npos);
  }
  // rings not increasing
  EXPECT_THROW(zagreb::parse_dataset_csv(
                   "formula,n,ehm,hof_kj_mol,ge_kj_mol,eg,eea\n"
                   "C14H10,3,772,177.87,252.38,-0.05,4.19\n"
                   "C10H8,2,432,80.83,121.68,-0.32,4.09\n"),
               zagreb::QsprError);
  // duplicate formula
  EXPECT_THROW(zagreb::parse_dataset_csv(
                   "formula,n,ehm,hof_kj_mol,ge_kj_mol,eg,eea\n"
                   "C10H8,2,432,80.83,121.68,-0.32,4.09\n"
                   "C10H8,3,772,177.87,252.38,-0.05,4.19\n"),
               zagreb::QsprError);
  // rings below the family's validity range
  EXPECT_THROW(zagreb::parse_dataset_csv(
                   "formula,n,ehm,hof_kj_mol,ge_kj_mol,eg,eea\n"
                   "C6H6,1,92,1,1,1,1\n"
                   "C10H8,2,432,80.83,121.68,-0.32,4.09\n"),
               zagreb::QsprError);
  // wrong field count
  EXPECT_THROW(zagreb::parse_dataset_csv(
                   "formula,n,ehm,hof_kj_mol,ge_kj_mol,eg,eea\n"
                   "C10H8,2,432,80.83\n"
                   "C14H10,3,772,177.87,252.38,-0.05,4.19\n"),
               zagreb::QsprError);
}

TEST(FitOls, RecoversAnExactLine) {
  const std::vector<DataPoint> points{{0.0, 1.0}, {1.0, 3.0}, {2.0, 5.0}};
  const RegressionModel model = zagreb::fit_ols(points, Property::ge);
  EXPECT_NEAR(model.slope, 2.0, 1e-12);
  EXPECT_NEAR(model.intercept, 1.0, 1e-12);
  ASSERT_TRUE(model.r_squared.has_value());
  EXPECT_NEAR(*model.r_squared, 1.0, 1e-12);
  EXPECT_EQ(model.source, zagreb::ModelSource::fitted);
}

TEST(FitOls, RejectsDegenerateInput) {
  EXPECT_THROW(zagreb::fit_ols(std::vector<DataPoint>{{1.0, 2.0}},
                               Property::ge),
               zagreb::QsprError);
  EXPECT_THROW(zagreb::fit_ols(
                   std::vector<DataPoint>{{1.0, 2.0}, {1.0, 3.0}, {1.0, 4.0}},
                   Property::ge),
               zagreb::QsprError);
}

// Expected fit values below were frozen from an independent least-squares
// computation over the tabulated rows.
TEST(FitOls, GibbsEnergyOnBuiltinRows) {
  const RegressionModel model =
      zagreb::fit_property(zagreb::builtin_acene_dataset(), Property::ge);
  EXPECT_NEAR(model.slope, 0.38441176470588234, 1e-12);
  EXPECT_NEAR(model.intercept, -44.38588235294117, 1e-8);
  EXPECT_GE(*model.r_squared, 0.999999999);
  // agreement with the reference coefficients
  EXPECT_LE(std::abs(model.slope - 0.38441) / 0.38441, 1e-4);
  EXPECT_LE(std::abs(model.intercept - (-44.386)), 1e-3);
}

TEST(FitOls, GapEnergyOnBuiltinRows) {
  const RegressionModel model =
      zagreb::fit_property(zagreb::builtin_acene_dataset(), Property::eg);
  EXPECT_NEAR(model.slope, 0.0005245098039215686, 1e-15);
  EXPECT_NEAR(model.intercept, -0.5357549019607841, 1e-12);
  EXPECT_NEAR(*model.r_squared, 0.8740457182742224, 1e-9);
}

TEST(FitOls, ElectronAffinityAndHeatOfFormationOnBuiltinRows) {
  const RegressionModel eea =
      zagreb::fit_property(zagreb::builtin_acene_dataset(), Property::eea);
  EXPECT_NEAR(eea.slope, -0.000342436974789916, 1e-15);
  EXPECT_NEAR(*eea.r_squared, 0.8530651997088914, 1e-9);

  const RegressionModel hof =
      zagreb::fit_property(zagreb::builtin_acene_dataset(), Property::hof);
  EXPECT_NEAR(hof.slope, 0.28015966386554625, 1e-12);
  EXPECT_NEAR(hof.intercept, -37.69897478991601, 1e-8);
  EXPECT_NEAR(*hof.r_squared, 0.9982878944963558, 1e-9);
}

TEST(RSquared, Conventions) {
  const std::vector<DataPoint> line{{0.0, 1.0}, {1.0, 3.0}, {2.0, 5.0}};
  const RegressionModel fit = zagreb::fit_ols(line, Property::ge);
  EXPECT_NEAR(zagreb::r_squared(fit, line), 1.0, 1e-12);

  // constant y with a matching flat model: 1 by the zero-variance rule
  const std::vector<DataPoint> flat{{0.0, 2.0}, {1.0, 2.0}, {2.0, 2.0}};
  RegressionModel flat_model{Property::ge, 0.0, 2.0, std::nullopt,
                             zagreb::ModelSource::fitted, ""};
  EXPECT_EQ(zagreb::r_squared(flat_model, flat), 1.0);

  // constant y with nonzero residuals: undefined
  RegressionModel sloped{Property::ge, 1.0, 0.0, std::nullopt,
                         zagreb::ModelSource::fitted, ""};
  EXPECT_THROW(zagreb::r_squared(sloped, flat), zagreb::QsprError);

  EXPECT_THROW(zagreb::r_squared(fit, std::vector<DataPoint>{{0.0, 1.0}}),
               zagreb::QsprError);
}

TEST(RSquared, ReferenceGibbsLineOnBuiltinRows) {
  const std::vector<DataPoint> points = zagreb::property_points(
      zagreb::builtin_acene_dataset(), Property::ge);
  EXPECT_GE(zagreb::r_squared(zagreb::tim_coefficients(Property::ge), points),
            0.999999);
}

TEST(TimCoefficients, FixedValues) {
  const RegressionModel eg = zagreb::tim_coefficients(Property::eg);
  EXPECT_EQ(eg.slope, 0.00046359);
  EXPECT_EQ(eg.intercept, -0.36444);
  EXPECT_EQ(eg.source, zagreb::ModelSource::reference);
  EXPECT_FALSE(eg.r_squared.has_value());

  const RegressionModel eea = zagreb::tim_coefficients(Property::eea);
  EXPECT_EQ(eea.slope, -0.00032528);
  EXPECT_EQ(eea.intercept, 4.2039);

  const RegressionModel ge = zagreb::tim_coefficients(Property::ge);
  EXPECT_EQ(ge.slope, 0.38441);
  EXPECT_EQ(ge.intercept, -44.386);

  const RegressionModel hof = zagreb::tim_coefficients(Property::hof);
  EXPECT_EQ(hof.slope, 0.28541);
  EXPECT_EQ(hof.intercept, -42.468);
  EXPECT_FALSE(hof.note.empty());
}

TEST(Predict, PointValues) {
  EXPECT_NEAR(zagreb::predict(zagreb::tim_coefficients(Property::eea), 432),
              4.06337904, 1e-12);
  EXPECT_NEAR(zagreb::predict(zagreb::tim_coefficients(Property::ge), 432),
              121.67912, 1e-10);
  EXPECT_NEAR(zagreb::predict(zagreb::tim_coefficients(Property::ge), 3152),
              1167.27432, 1e-10);
  EXPECT_NEAR(zagreb::predict(zagreb::tim_coefficients(Property::eg), 772),
              -0.00654852, 1e-12);
  const RegressionModel ge = zagreb::tim_coefficients(Property::ge);
  EXPECT_EQ(zagreb::predict(ge, 0), ge.intercept);
}

TEST(TimCoefficients, ReproduceTheTabulatedColumns) {
  const PropertyDataset dataset = zagreb::builtin_acene_dataset();
  const double printed_hof[8] = {80.82912,  177.86852, 274.90792, 371.94732,
                                 468.98672, 566.02612, 633.06552, 760.10492};
  const double printed_ge[8] = {121.67912, 252.37852, 383.07792, 513.77732,
                                644.47672, 775.17612, 905.87552, 1036.57492};
  const double printed_eg[8] = {-0.16412912, -0.00650852, 0.15111208,
                                0.30873268,  0.46635328,  0.62397388,
                                0.78159448,  0.93921508};
  const double printed_eea[8] = {4.06337904, 3.95278384, 3.84218864,
                                 3.73159344, 3.62099824, 3.51040304,
                                 3.39980784, 3.28921264};
  for (int i = 0; i < 8; ++i) {
    const std::int64_t x = dataset.records[static_cast<std::size_t>(i)].ehm;
    const double hof = zagreb::predict(zagreb::tim_coefficients(Property::hof), x);
    if (i == 6) {
      // the 633.06552 cell: the line value is 663.06552
      EXPECT_NEAR(hof, 663.06552, 1e-8);
      EXPECT_GT(std::abs(hof - printed_hof[i]), 1.0);
    } else {
      EXPECT_NEAR(hof, printed_hof[i], 1e-8) << "row " << i + 1;
    }
    EXPECT_NEAR(zagreb::predict(zagreb::tim_coefficients(Property::ge), x),
                printed_ge[i], 1e-8)
        << "row " << i + 1;
    EXPECT_NEAR(zagreb::predict(zagreb::tim_coefficients(Property::eea), x),
                printed_eea[i], 1e-8)
        << "row " << i + 1;
    // eg carries a uniform 4e-5 offset: inside 1e-4, outside 1e-6
    const double eg = zagreb::predict(zagreb::tim_coefficients(Property::eg), x);
    EXPECT_NEAR(eg, printed_eg[i], 1e-4) << "row " << i + 1;
    EXPECT_GT(std::abs(eg - printed_eg[i]), 1e-6) << "row " << i + 1;
  }
}

TEST(ParseProperty, NamesAndErrors) {
  EXPECT_EQ(zagreb::parse_property("hof"), Property::hof);
  EXPECT_EQ(zagreb::parse_property("HoF"), Property::hof);
  EXPECT_EQ(zagreb::parse_property("GE"), Property::ge);
  EXPECT_EQ(zagreb::parse_property("Eg"), Property::eg);
  EXPECT_EQ(zagreb::parse_property("EEA"), Property::eea);
  EXPECT_THROW(zagreb::parse_property("energy"), zagreb::QsprError);
  EXPECT_EQ(zagreb::property_name(Property::eea), "Eea");
}

TEST(ReproduceTable, TableOne) {
  const zagreb::TableReport table = zagreb::reproduce_table(1);
  ASSERT_EQ(table.rows.size(), 8u);
  const std::int64_t expected[8] = {432,  772,  1112, 1452,
                                    1792, 2132, 2472, 2812};
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(table.rows[static_cast<std::size_t>(i)].ehm, expected[i]);
    EXPECT_EQ(table.rows[static_cast<std::size_t>(i)].rings, i + 2);
    EXPECT_FALSE(table.rows[static_cast<std::size_t>(i)].hof.has_value());
  }
  EXPECT_EQ(table.rows[0].formula, "C10H8");
  EXPECT_EQ(table.rows[7].formula, "C36H22");  // as printed, annotated
  ASSERT_FALSE(table.rows[7].errata.empty());
  EXPECT_NE(table.rows[7].errata[0].find("C38H22"), std::string::npos);
}

TEST(ReproduceTable, TableThree) {
  const zagreb::TableReport table = zagreb::reproduce_table(3);
  ASSERT_EQ(table.rows.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    if (i == 6) continue;
    EXPECT_TRUE(table.rows[i].errata.empty()) << "row " << i + 1;
  }
  const zagreb::TableRow& row7 = table.rows[6];
  ASSERT_TRUE(row7.hof.has_value());
  EXPECT_NEAR(*row7.hof, 663.06552, 1e-8);
  ASSERT_EQ(row7.errata.size(), 1u);
  EXPECT_NE(row7.errata[0].find("633.06552"), std::string::npos);
  bool eg_note = false;
  for (const std::string& note : table.notes)
    if (note.find("eg") != std::string::npos) eg_note = true;
  EXPECT_TRUE(eg_note);
}

TEST(ReproduceTable, TableFour) {
  const zagreb::TableReport table = zagreb::reproduce_table(4);
  ASSERT_EQ(table.rows.size(), 8u);
  const std::int64_t expected[8] = {3152, 3492, 3832, 4172,
                                    4512, 4852, 5192, 5532};
  for (int i = 0; i < 8; ++i) {
    const zagreb::TableRow& row = table.rows[static_cast<std::size_t>(i)];
    EXPECT_EQ(row.ehm, expected[i]);
    EXPECT_EQ(row.rings, i + 10);
    EXPECT_FALSE(row.errata.empty()) << "row " << i + 1;
  }
  EXPECT_EQ(table.rows[0].formula, "C42H24");
  EXPECT_EQ(table.rows[7].formula, "C70H38");
  ASSERT_TRUE(table.rows[0].ge.has_value());
  EXPECT_NEAR(*table.rows[0].ge, 1167.27432, 1e-5);
  EXPECT_NE(table.rows[0].errata[0].find("121.67912"), std::string::npos);
}

TEST(ReproduceTable, RejectsUnknownTables) {
  EXPECT_THROW(zagreb::reproduce_table(2), zagreb::QsprError);
  EXPECT_THROW(zagreb::reproduce_table(5), zagreb::QsprError);
}

}  // namespace
