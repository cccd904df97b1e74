// Published counterexamples, one per line:
// metric|params|property|g|p|q|printed score of p|printed score of q|flags
//
// Printed scores are exact rationals, 4-decimal roundings, or "expression@value" for
// closed forms that are only compared numerically. An empty field means no number was given.
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "internal.hpp"

namespace tsad {

namespace {

constexpr const char* kTable = R"(
pointwise-precision||P1|000110011000|000110000000|000110001000|1|1|
pointwise-precision||P2|000111111000|000111000000|000111011000|1|1|
pointwise-precision||P3|000000000001|000000010000|000000110000|0|0|
pointwise-precision||P4|000000111000|010010010000|011100010000|1/3|1/4|
pointwise-precision||P6|000111111000|000010000010|010111111010|1/2|3/4|
pointwise-precision||P7|000111111000|000010000000|000111111000|1|1|
pointwise-precision||P8|000111111000|000010000000|000000010000|1|1|
pointwise-precision||P9|000111111000|000010010000|000110000000|1|1|
pointwise-recall||P2|000111111000|000111000000|000111011000|1/2|5/6|
pointwise-recall||P3|000000111000|000100010000|001100010000|1/3|1/3|
pointwise-recall||P4|000000111000|000010111000|000000111000|1|1|
pointwise-recall||P6|000000111000|000000111000|000010111000|1|1|
pointwise-recall||P8|000111111000|000111000000|000000111000|1/2|1/2|
pointwise-recall||P9|000111111000|000000111000|000001110000|1/2|1/2|
pointwise-f1||P2|000111111000|000111000000|000111011000|2/3|10/11|
pointwise-f1||P3|000000000001|000000010000|000010010000|0|0|
pointwise-f1||P4|000000111000|010010010000|001100010000|1/3|1/3|
pointwise-f1||P6|000111111000|000000010010|010001111010|1/4|2/3|
pointwise-f1||P8|000111111000|000110000000|000000011000|1/2|1/2|
pointwise-f1||P9|000111111000|000010010000|000110000000|1/2|1/2|
pa-precision||P1|000110011000|000110000000|000110011000|1|1|
pa-precision||P2|000111111000|000111000000|000111011000|1|1|
pa-precision||P3|000000000001|000000010000|000010010000|0|0|
pa-precision||P4|000000111000|010010010000|011100010000|3/5|1/2|
pa-precision||P7|000111111000|000010000000|000110000000|1|1|
pa-precision||P8|000111111000|000010000000|000000001000|1|1|
pa-precision||P9|000111111000|000010001000|000110000000|1|1|
pa-recall||P2|000111111000|000111000000|000111011000|1|1|
pa-recall||P3|000000111000|000100010000|011100010000|1|1|
pa-recall||P4|000000111000|000010010000|000000010000|1|1|
pa-recall||P6|000000111000|000000010000|000010110000|1|1|
pa-recall||P7|000111111000|000010000000|000011000000|1|1|
pa-recall||P8|000111111000|000111000000|000000111000|1|1|
pa-recall||P9|000111111000|000000111000|000001110000|1|1|
pa-f1||P2|000111111000|000111000000|000111011000|1|1|
pa-f1||P3|000000000001|000000010000|000010010000|0|0|
pa-f1||P4|000000111000|010010010000|001100010000|3/4|3/4|
pa-f1||P7|000111111000|000010000000|000011000000|1|1|
pa-f1||P8|000111111000|000110000000|000011000000|1|1|
pa-f1||P9|000111111000|000010010000|000110000000|1|1|
event-precision||P1|000110011000|000110000000|000110011000|1|1|
event-precision||P2|000111111000|000111000000|000111011000|1|1|
event-precision||P3|000111111000|001111000000|011111000000|1|1|
event-precision||P4|000111111000|000111000000|001111000000|1|1|
event-precision||P5|000111111000|110111000000|011111000000|1/2|1|
event-precision||P6|000111111000|000111000000|001111000000|1|1|
event-precision||P7|000111111000|000101100000|000111100000|1|1|
event-precision||P8|000111111000|000111000000|000000111000|1|1|
event-precision||P9|000111111000|000001001000|000011000000|1|1|
event-recall||P2|000111111000|000111000000|000111011000|1|1|
event-recall||P3|000111111000|001111000000|011111000000|1|1|
event-recall||P4|000111111000|001111000000|000111000000|1|1|
event-recall||P6|000111111000|000111000000|001111000000|1|1|
event-recall||P7|000111111000|000111000000|000111100000|1|1|
event-recall||P8|000111111000|000111000000|000000111000|1|1|
event-recall||P9|000111111000|000010100000|000110000000|1|1|
event-f1||P2|000111111000|000111000000|000111011000|1|1|
event-f1||P3|000111111000|001111000000|011111000000|1|1|
event-f1||P4|000111111000|001111000000|000111000000|1|1|
event-f1||P5|000111111000|001111000000|010111000000|1|2/3|
event-f1||P6|000111111000|000111000000|001111000000|1|1|
event-f1||P7|000111111000|000111000000|000111100000|1|1|
event-f1||P8|000111111000|000111000000|000000111000|1|1|
event-f1||P9|000111111000|000010100000|000110000000|1|1|
composite-f1||P2|000111111000|000111000000|000111011000|1|1|
composite-f1||P3|000000000001|000000010000|000010010000|0|0|
composite-f1||P4|000000111000|010010010000|001100010000|1|1|inconsistent
composite-f1||P7|000000111000|000000011000|000000111000|1|1|
composite-f1||P8|000111111000|000111000000|000000111000|1|1|
composite-f1||P9|000111111000|000000111000|000001110000|1|1|
kdelay-precision|k=1|P1|000111011000|000000011000|000001011000|1|1|
kdelay-precision|k=1|P2|000111111000|000111000000|000111011000|1|1|
kdelay-precision|k=1|P3|000000000001|000000010000|000010010000|0|0|
kdelay-precision|k=1|P4|000000111000|010100111000|011000111000|3/5|3/5|
kdelay-precision|k=0|P6|000110000000|000010000000|100100000000|0|2/3|
kdelay-precision|k=1|P7|000111111000|000110000000|000111000000|1|1|
kdelay-precision|k=1|P8|000111111000|000111000000|000011100000|1|1|
kdelay-precision|k=0|P8|000111111000|000011000000|000001100000|0|0|
kdelay-precision|k=1|P9|000111111000|000100100000|000110000000|1|1|
kdelay-recall|k=1|P1|000111011000|000000011000|000001011000|2/5|2/5|
kdelay-recall|k=1|P2|000111111000|000111000000|000111011000|1|1|
kdelay-recall|k=1|P3|000111111000|010111000000|110111000000|1|1|
kdelay-recall|k=1|P4|000111111000|000111000000|010111000000|1|1|
kdelay-recall|k=1|P6|000111111000|000110100000|010110010000|1|1|
kdelay-recall|k=1|P7|000111111000|000100000000|000110000000|1|1|
kdelay-recall|k=1|P8|000111111000|000111000000|000011100000|1|1|
kdelay-recall|k=0|P8|000111111000|000011000000|000001100000|0|0|
kdelay-recall|k=1|P9|000111111000|000100100000|000110000000|1|1|
kdelay-f1|k=1|P1|000111011000|000000011000|000001011000|4/7|4/7|
kdelay-f1|k=1|P2|000111111000|000111000000|000111011000|1|1|
kdelay-f1|k=1|P3|000000000001|000000010000|000010010000|0|0|
kdelay-f1|k=1|P4|000000111000|010100111000|011000111000|3/4|3/4|
kdelay-f1|k=0|P6|000110000000|000010000000|100100000000|0|4/5|
kdelay-f1|k=1|P7|000111111000|000110000000|000111000000|1|1|
kdelay-f1|k=1|P8|000111111000|000111000000|000011100000|1|1|
kdelay-f1|k=0|P8|000111111000|000011000000|000001100000|0|0|
kdelay-f1|k=1|P9|000111111000|000100100000|000110000000|1|1|
lsa-f1|b=3|P1|001000000000|100000000000|101000000000|1|1|
lsa-f1|b=3|P2|000111111000|000100000000|000101000000|1|1|
lsa-f1|b=3|P3|100000000000|000100000000|000100100000|0|0|
lsa-f1|b=3|P4|100000000000|100100000000|100101000000|2/3|2/3|
lsa-f1|b=3|P5|100000000000|101000000000|100100000000|1|2/3|
lsa-f1|b=3|P6|111111000000|000100000000|100000100000|2/3|4/5|
lsa-f1|b=3|P7|110000000000|100000000000|110000000000|1|1|
lsa-f1|b=3|P8|110000000000|100000000000|010000000000|1|1|
lsa-f1|b=3|P9|111111000000|100001000000|100100000000|1|1|
pa-percent-k-f1|kPercent=0.4|P2|000111111000|000111000000|000111011000|1|1|
pa-percent-k-f1|kPercent=0.6|P2|000111111000|000111000000|000111011000|2/3|1|
pa-percent-k-f1|kPercent=0.9|P2|000111111000|000111000000|000111011000|2/3|10/11|
pa-percent-k-f1|kPercent=0.4|P3|000000000001|000000010000|000010010000|0|0|
pa-percent-k-f1|kPercent=0.4|P4|000000111000|001010111000|000110111000|3/4|3/4|
pa-percent-k-f1|kPercent=0.4|P6|000000111000|000000100000|000010111000|1/2|6/7|
pa-percent-k-f1|kPercent=0.4|P7|000111111000|000111110000|000111111000|1|1|
pa-percent-k-f1|kPercent=0.4|P8|000111111000|000111000000|000000111000|1|1|
pa-percent-k-f1|kPercent=0.6|P8|000111111000|000111000000|000000111000|2/3|2/3|
pa-percent-k-f1|kPercent=0.2|P9|000111111000|000100100000|000110000000|1|1|
pa-percent-k-f1|kPercent=0.4|P9|000111111000|000100100000|000110000000|1/3|1/3|inconsistent
pa-percent-k-integrated-f1||P3|000000000001|000000010000|000010010000|0|0|
pa-percent-k-integrated-f1||P6|000000111000|000000100000|000010111000|2/3|6/7|
pa-decay-f1|d=0.7|P1|101111111111|100000000000|100000000001|1/6|(2+20*0.7^9)/22@0.12759418818181817|
pa-decay-f1|d=0.9|P2|000111111000|000100000000|000100001000|1|1|
pa-decay-f1|d=0.9|P3|000111111000|000000000000|010000000000|0|0|
pa-decay-f1|d=0.9|P4|000111111000|001000000000|101000000000|0|0|
pa-decay-f1|d=0.9|P6|001111111111|000000000001|101000000000|0.9^9@0.38742048900000009|20/21|
pa-decay-f1|d=0.9|P7|000111111000|000100000000|000110000000|1|1|
pa-decay-f1|d=0.9|P9|000111111000|000100001000|000110000000|1|1|
reduced-length-f1||P2|000111111000|000111000000|000111011000|1|1|
reduced-length-f1||P3|000000000001|000000010000|000010010000|0|0|
reduced-length-f1||P4|000000111000|010010010000|001100010000|ln3/(1+ln3)@0.52349464195949558|ln3/(1+ln3)@0.52349464195949558|
reduced-length-f1||P7|000111111000|000010000000|000011000000|1|1|
reduced-length-f1||P8|000111111000|000110000000|000011000000|1|1|
reduced-length-f1||P9|000111111000|000010010000|000110000000|1|1|
balanced-pa-f1|B=1|P1|000001000111|000000000010|000001000010|6/7|4/5|
balanced-pa-f1|B=1|P2|000111111000|000010000000|000010010000|1|1|
balanced-pa-f1|B=1|P3|000000100000|000010000000|000011000000|0|2/5|
balanced-pa-f1|B=1|P4|000000000000|000010100000|000011000000|0|0|
balanced-pa-f1|B=1|P5|000000100000|000010000000|000001000000|0|1/2|
balanced-pa-f1|B=1|P6|001101100000|001000100000|000111000000|4/5|8/9|
balanced-pa-f1|B=1|P7|000111000000|000010000000|000011000000|1|6/7|
balanced-pa-f1|B=1|P8|000111100000|000001000000|000010000000|1|1|
balanced-pa-f1|B=1|P9|000111110000|000010100000|000011000000|1|1|
range-precision||P1|000111000111|000111000000|000111000001|1|1|
range-precision||P2|000111111000|000100000000|000110011000|1|1|
range-precision||P3|000000000000|000001100000|000011100000|0|0|
range-precision||P4|000000000001|000100000000|000100100000|0|0|
range-precision||P5|000011110000|110011000000|001111000000|0.5|0.3|
range-precision||P6|011111111110|000000001011|111111111011|0.6667|0.7222|
range-precision||P7|000111000000|000110000000|000100000000|1|1|
range-precision||P8|000111100000|000110000000|000011000000|1|1|
range-precision||P9|000111100000|000100000000|000000100000|1|1|
range-recall||P2|111111111111|100000000000|110011111111|0.1667|0.8846|
range-recall||P3|000001000000|000010000000|000110000000|0|0|
range-recall||P4|000010000000|000001000000|000101000000|0|0|
range-recall||P6|000010000000|000001000000|000101000000|0|0|
range-recall||P8|111111111111|100000000001|010100000000|0.1923|0.2821|
range-f1||P2|111111111111|100000000000|110011111111|0.2667|0.5488|
range-f1||P3|000001000000|000010000000|000110000000|0|0|
range-f1||P4|000010000000|000001000000|000101000000|0|0|
range-f1||P5|000001000000|000101000000|000011000000|0.6667|0.5|
range-f1||P6|000010000000|000001000000|000101000000|0|0|
range-f1||P8|111111111111|100000000001|010100000000|0.1538|0.2273|
range-f1||P9|000000000011|111111111110|111111111101|0.0296|0.4|
ts-precision||P1|000111000111|000111000000|000111000001|1|1|
ts-precision||P2|000111111000|000100000000|000110011000|1|1|
ts-precision||P3|000000000000|000001100000|000011100000|0|0|
ts-precision||P4|000000000001|000100000000|000100100000|0|0|
ts-precision||P5|000011110000|110011000000|001111000000|0.5|0.3|
ts-precision||P6|011111111110|000000001011|111111111011|0.6667|0.7222|
ts-precision||P7|000111000000|000110000000|000100000000|1|1|
ts-precision||P8|000111100000|000110000000|000011000000|1|1|
ts-precision||P9|000111100000|000100000000|000000100000|1|1|
ts-recall||P2|111111111111|100000000000|110011111111|0.1667|0.8846|
ts-recall||P3|000001000000|000010000000|000110000000|0|0|
ts-recall||P4|000010000000|000001000000|000101000000|0|0|
ts-recall||P6|000010000000|000001000000|000101000000|0|0|
ts-recall||P8|111111111111|100000000001|010100000000|0.1923|0.2821|
ts-f1||P2|111111111111|100000000000|110011111111|0.2667|0.5488|
ts-f1||P3|000001000000|000010000000|000110000000|0|0|
ts-f1||P4|000010000000|000001000000|000101000000|0|0|
ts-f1||P5|000001000000|000101000000|000011000000|0.6667|0.5|
ts-f1||P6|000010000000|000001000000|000101000000|0|0|
ts-f1||P8|111111111111|100000000001|010100000000|0.1538|0.2273|
ts-f1||P9|000000000011|111111111110|111111111101|0.0296|0.4|
nab||P2|000111111000|000111000000|000111011000|||
nab||P4|000110000000|000000000011|000001000010|||
nab||P5|000110000000|000000000001|000001000000|||
nab||P7|000111111000|000100000000|000111111000|||
nab||P9|000111111000|000100001000|000110000000|||
tap|alphaWeight=0.5,theta=0.5,delta=1|P2|000111111000|000110000000|000110011000|||
tap|alphaWeight=0.5,theta=0.5,delta=1|P3|000000111000|000100000000|000111000000|0|0|
tap|alphaWeight=0.5,theta=0.5,delta=1|P4|000000111000|000100000000|000101000000|0|0|
tap|alphaWeight=0.5,theta=0.5,delta=0|P6|000000111000|000000000100|000100000100|0|0|
tap|alphaWeight=0.5,theta=0.5,delta=1|P7|000111111000|000110000000|000111111000|||
tap|alphaWeight=0.5,theta=0.5,delta=1|P8|000111111000|000111000000|000000111000|||
tap|alphaWeight=0.5,theta=0.5,delta=1|P9|000111111000|000000111000|000001110000|||
tar|alphaWeight=0.5,theta=0.5,delta=1|P3|000000111000|000100000000|000111000000|0|0|
tar|alphaWeight=0.5,theta=0.5,delta=1|P4|000000111000|000100000000|000101000000|0|0|
tar|alphaWeight=0.5,theta=0.5,delta=1|P6|000000111000|000000000000|000100000000|0|0|
tar|alphaWeight=0.5,theta=0.5,delta=1|P8|000111111000|000011000000|000110000000|||
tar|alphaWeight=0.5,theta=0.5,delta=1|P9|000111111000|000010100000|000110000000|||
tt-precision|delta=1|P1|000110011000|000110000000|000110001000|1|1|
tt-precision|delta=1|P2|000111111000|000111000000|000111011000|1|1|
tt-precision|delta=1|P3|000000000000|100000000000|110000000000|0|0|
tt-precision|delta=1|P4|000000000000|000110000000|000101000000|0|0|
tt-precision|delta=1|P5|000000110000|000001010000|000010010000|1|1/2|
tt-precision|delta=0|P6|000111111000|000010000100|001011110100|1/2|2/3|
tt-precision|delta=1|P7|000111111000|000010000000|000111111000|1|1|
tt-precision|delta=1|P8|000111111000|000010000000|000000010000|1|1|
tt-precision|delta=1|P9|000111111000|000010010000|000110000000|1|1|
tt-recall|delta=1|P1|000000100000|000001100000|000001000000|1|1|
tt-recall|delta=0|P2|000111111000|000110000000|000110011000|1/3|2/3|
tt-recall|delta=1|P3|000000111000|000010000000|000011000000|0|1/3|
tt-recall|delta=0|P4|000000111000|000110010000|000101010000|1/3|1/3|
tt-recall|delta=1|P5|000000111000|000001001000|000010001000|1|2/3|
tt-recall|delta=0|P6|000000111000|000000010000|000100110000|1/3|2/3|
tt-recall|delta=1|P7|111000000000|100100000000|110100000000|1|1|
tt-recall|delta=0|P8|000001100000|000001000000|000000100000|1/2|1/2|
tt-recall|delta=0|P9|000011110000|000011000000|000001010000|1/2|1/2|
affiliation-precision||P1|010000001000|000000001000|010000001000|30/35|29/35|
affiliation-precision||P2|000111111000|000111000000|000111011000|1/2|1/2|
affiliation-precision||P3|010000100000|001100000000|001110000000|1/8|1/4|
affiliation-precision||P4|010000001000|000011101000|000010101000|3/35|3/28|
affiliation-precision||P5|000000111000|010000100000|000010100000|5/12|7/12|
affiliation-precision||P6|000111111000|100000001000|100111100010|1/4|13/36|
affiliation-precision||P7|000111111000|000011111000|000111111000|1/2|1/2|
affiliation-precision||P8|000111111000|000010000000|000000010000|1/2|1/2|
affiliation-precision||P9|000111111000|000010010000|000110000000|1/2|1/2|
affiliation-recall||P5|000000010000|000100000000|000010000000|1/3|1/2|
affiliation-f1||P5|000000111000|010000100000|000010100000|5/21|133/240|
etap|thetaP=0.5,thetaR=0.5|P3|000000000000|010000000000|011000000000|0|0|
etap|thetaP=0.5,thetaR=0.5|P4|000000000000|010000000000|010100000000|||
etap|thetaP=0.5,thetaR=0.5|P6|010000000000|100000000000|101000000000|||
etar|thetaP=0.5,thetaR=0.5|P3|100000000000|010000000000|011000000000|0|0|
etar|thetaP=0.5,thetaR=0.5|P4|100000000000|010000000000|010100000000|||
etar|thetaP=0.5,thetaR=0.5|P6|100000000000|100000000000|101000000000|1|1|
temporal-distance||P2|000111111000|000111000000|000111011000|-6|-1|
temporal-distance||P3|000000011000|000010000000|000011000000|-10|-10|
temporal-distance||P4|000000111000|001110110000|001010110000|-10|-7|
temporal-distance||P5|000000011110|011001011000|001011011000|-16|-13|
temporal-distance||P6|000011110000|000010000000|001011110000|-6|-2|
temporal-distance||P8|000011111000|000011000000|000000011000|-6|-6|
temporal-distance||P9|000111111000|000010010000|000011000000|-4|-7|
average-alert-delay||P1|000110011000|000110010000|000110000000|0|0|
average-alert-delay||P2|000111111000|000010000000|000010010000|-1|-1|
average-alert-delay||P3|000000111000|000010010000|000110010000|-1|-1|
average-alert-delay||P4|000000111000|010010010000|000010010000|-1|-1|
average-alert-delay||P6|000000111000|000000010000|000010010000|-1|-1|
average-alert-delay||P7|000111111000|000010000000|000011000000|-1|-1|
average-alert-delay||P9|000111111000|000010010000|000011000000|-1|-1|
)";

constexpr double kDecimalTolerance = 5e-5;
constexpr double kExpressionTolerance = 1e-9;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

PrintedScore parse_printed(const std::string& text) {
    PrintedScore s;
    if (text.empty()) return s;
    if (auto at = text.find('@'); at != std::string::npos) {
        s.text = text.substr(0, at);
        s.approx = std::stod(text.substr(at + 1));
        s.tolerance = kExpressionTolerance;
        return s;
    }
    s.text = text;
    if (text.find('.') != std::string::npos) {
        s.approx = std::stod(text);
        s.tolerance = kDecimalTolerance;
    } else {
        s.exact = parse_rational(text);
        s.approx = s.exact->get_d();
    }
    return s;
}

Params parse_params(const std::string& text) {
    Params out;
    if (text.empty()) return out;
    for (const auto& kv : split(text, ',')) {
        auto eq = kv.find('=');
        out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return out;
}

std::vector<Fixture> load() {
    std::vector<Fixture> out;
    std::istringstream in(kTable);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line, '|');
        if (f.size() != 9) throw std::logic_error("malformed fixture: " + line);
        out.push_back(Fixture{make_descriptor(f[0], parse_params(f[1])), *parse_property(f[2]),
                              BinarySeq::parse(f[3]), BinarySeq::parse(f[4]), BinarySeq::parse(f[5]),
                              parse_printed(f[6]), parse_printed(f[7]), f[8] == "inconsistent",
                              fmt::format("{} {} counterexample", f[0], f[2])});
    }
    return out;
}

bool reproduces(const PrintedScore& printed, const Score& s) {
    if (printed.text.empty()) return true;
    if (!s.defined()) return false;
    if (printed.exact && s.rational()) return *printed.exact == *s.rational();
    double target = printed.exact ? printed.exact->get_d() : *printed.approx;
    double tol = printed.exact ? kExpressionTolerance : printed.tolerance;
    return std::abs(s.value() - target) <= tol;
}

std::string render(const Score& s) {
    if (!s.defined()) return "undefined";
    if (s.rational()) return rational_string(*s.rational());
    return fmt::format("{:.6g}", s.value());
}

}  // namespace

const std::vector<Fixture>& reference_fixtures() {
    static const std::vector<Fixture> fixtures = load();
    return fixtures;
}

FixtureResult evaluate_fixture(const Fixture& f) {
    FixtureResult r;
    r.fixture = &f;
    auto scorer = make_scorer(f.metric);
    r.scoreP = scorer(f.g, f.p);
    r.scoreQ = scorer(f.g, f.q);
    r.printedReproduced = reproduces(f.scoreP, r.scoreP) && reproduces(f.scoreQ, r.scoreQ);

    const Score* first = &r.scoreP;
    const Score* second = &r.scoreQ;
    if (auto rel = precondition(f.property, f.g, f.p, f.q)) {
        r.orientation = FixtureOrientation::forward;
        r.expected = *rel;
    } else if (auto rev = precondition(f.property, f.g, f.q, f.p)) {
        r.orientation = FixtureOrientation::reversed;
        r.expected = *rev;
        std::swap(first, second);
    }
    if (r.orientation != FixtureOrientation::none && first->defined() && second->defined()) {
        r.violates = !relation_holds(*first, *second, r.expected);
    }

    std::vector<std::string> notes;
    if (r.orientation == FixtureOrientation::none) notes.push_back("precondition does not hold in either order");
    if (!r.printedReproduced) {
        notes.push_back(fmt::format("printed {} / {}, computed {} / {}", f.scoreP.text.empty() ? "-" : f.scoreP.text,
                                    f.scoreQ.text.empty() ? "-" : f.scoreQ.text, render(r.scoreP), render(r.scoreQ)));
    }
    for (std::size_t i = 0; i < notes.size(); ++i) r.detail += (i ? "; " : "") + notes[i];
    return r;
}

}  // namespace tsad
