// Printed experiment tables: matmul with fixed workload and LU with variable
// workload. Raw times in ms; derived columns as printed (six decimals).
#pragma once

namespace scalab::testdata {

struct MatmulRow {
  long n;
  double t_ms;
  const char* s_theor;
  const char* s_comp;
  const char* e_theor;
  const char* e_comp;
};

inline constexpr double kMatmulS = 0.023595;
inline constexpr double kMatmulT1 = 1529020;

inline constexpr MatmulRow kMatmul[] = {
    {2, 953760, "1.953898", "1.603150", "0.976949", "0.801575"},
    {4, 493262, "3.735577", "3.099813", "0.933894", "0.774953"},
    {8, 270447, "6.865980", "5.653677", "0.858248", "0.706710"},
    {16, 163341, "11.817493", "9.360908", "0.738593", "0.585057"},
    {32, 100269, "18.481672", "15.249180", "0.577552", "0.476537"},
    {64, 74392, "25.739145", "20.553555", "0.402174", "0.321149"},
    {128, 64154, "32.027504", "23.833588", "0.250215", "0.186200"},
};

struct LuRow {
  long n;
  double t_one_pu_ms;
  double t_n_pu_ms;
  const char* s_theor;
  const char* s_comp;
  const char* e_theor;
  const char* e_comp;
};

inline constexpr double kLuS = 0.01;
inline constexpr long kLuZ1 = 100;

inline constexpr LuRow kLu[] = {
    {2, 21, 10, "1.997481", "2.100000", "0.998741", "1.050000"},
    {4, 167, 35, "3.998107", "4.771429", "0.999527", "1.192857"},
    {8, 1053, 111, "7.998896", "9.486486", "0.999862", "1.185811"},
    {16, 10255, 593, "15.999408", "17.293423", "0.999963", "1.080839"},
    {32, 94539, 2989, "31.999695", "31.628973", "0.999990", "0.988405"},
    {64, 831699, 18074, "63.999844", "46.016323", "0.999998", "0.719005"},
    {128, 5383229, 202302, "127.999924", "26.609865", "0.999999", "0.207890"},
};

}  // namespace scalab::testdata
