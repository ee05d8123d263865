#pragma once

// Generated by hydrogen_oracle.py from the spinor in Cartesian coordinates.

#include <array>

namespace polar::fixtures {

struct HydrogenReference {
  double alpha, mass, K, r, theta, phi;
  double phi2;
  double beta;
  double mu;
  double p;
  double Pi;
  double Q;
  double Pi_r;
  double Pi_theta;
  double Q_t;
  double Q_phi;
  double Pi_rr;
  double Pi_rtheta;
  double Pi_thetatheta;
  double Pi_tt;
  double Pi_tphi;
  double Pi_phiphi;
  double Pi_1;
  double Q_2;
  double Pi_11;
  double Pi_22;
  double strong_ec;
  double weak_ec;
  std::array<double, 4> u, s;  // lower, spherical
};

inline constexpr std::array<HydrogenReference, 6> kHydrogenReference{{
    {0.0072973525693000000, 1.0000000000000000, 1.0000000000000000, 0.69999999999999996, 0.90000000000000002, 0.29999999999999999, 0.98983834434132541, -0.0045361967666575725, 2.0002945390315984, 0.0068794060993048931, -0.00054777192989846992, -3.0092655381050560e-36, -0.0039358712181385150, -0.0044619975523075031, -3.2933319912223242e-5, -0.010507177067553493, -0.0019425604298495713, -0.0022022315779167234, -0.0024966141841719404, 1.0344948295283499e-7, 3.3004933539326125e-5, 0.010530024963314541, -0.0050246093482580564, -0.0057612940511661712, -0.0031659013800938219, 0.0031659013800938219, 1.0208398012072949, 2.0208295126843843, {1.0000163379438371, 0.0, 0.0, -0.0031344154346323116}, {0.0, -0.62162012409941465, 0.54832319524543902, 2.2619483952582746e-37}},
    {0.0072973525693000000, 1.0000000000000000, 1.0000000000000000, 2.2999999999999998, 2.1000000000000001, 1.0000000000000000, 0.96692725299132643, 0.0036841214445032172, 1.9399772247991448, 0.0020452808881039569, 0.00024066689009684383, -7.5231638452626401e-37, 0.0011540747277535877, -0.00029346784563068765, -3.8580440533368795e-5, -0.0030849045306701750, -0.00085167572073649047, 0.00021657127821090876, -5.5071569382472422e-5, 4.5355300972796900e-8, 3.6266245674378566e-6, 0.00028998607596127166, 0.0013369671418911712, -0.0061245910049486117, -0.0011430043227697695, 0.0011430043227697695, 1.0063389264512300, 2.0063321400834969, {1.0000198401922656, -3.8518598887744717e-34, 5.0940847029042380e-34, -0.012506450554029028}, {0.0, 0.50485612084363733, 1.9853680697631661, 1.4827177447908521e-36}},
    {0.30000000000000000, 1.0000000000000000, 1.0000000000000000, 0.69999999999999996, 0.90000000000000002, 0.29999999999999999, 0.65997964015183479, -0.19305267520004702, 1.8857379157382708, 0.19676644667138618, -0.024782455313683684, 0.0, -0.10998705901916498, -0.13070667816567654, -0.066107517783851170, -0.51303319167060726, -0.053276539406110502, -0.063312898372181035, -0.075239930088746908, 0.0052691082929120277, 0.040891377189646507, 0.31734112026417216, -0.14306791622536163, -0.27343301688705381, -0.090144105149596482, 0.090144105149596482, 1.8758436663158220, 2.8572668019038258, {1.0288109914449836, -6.1629758220391547e-33, -3.0198581527991854e-33, -0.13256869539317833}, {0.0, -0.63951916774862711, 0.53814260628594592, 4.6324703134889463e-34}},
    {0.30000000000000000, 1.0000000000000000, 1.0000000000000000, 2.2999999999999998, 2.1000000000000001, 1.0000000000000000, 0.22504901770263713, 0.15745256930345287, 0.50637870190864836, 0.020616136637096225, 0.0014722941180169308, -1.9259299443872359e-34, 0.011545092582436440, -0.0030774552973880344, -0.019186110458514574, -0.037316900220509903, -0.0084146284937581653, 0.0022430000321576830, -0.00059789319849252018, 0.00083221600487718118, 0.0016186564589557537, 0.0031482796735035728, 0.013542131674713902, -0.071560933004031929, -0.011577483513783597, 0.011577483513783597, 1.2624518818623542, 2.2500818136328822, {1.0353174817677472, -1.2325951644078309e-32, 1.6301071049293562e-32, -0.53229811285101766}, {0.0, 0.52267599769458119, 1.9608222381403478, 3.0366059413316650e-33}},
    {0.30000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0471975511965976, 0.0, 0.52996566172548242, -0.15596566156452571, 1.3821713240534364, 0.11170181877523683, 0.0088013259864273981, 0.0, -0.062394163251826739, -0.037762665477837569, -0.057074140740476814, -0.25366284773545254, -0.046227616762267785, -0.027978226434186311, -0.016933192953211652, 0.0045719620973671436, 0.020319831543853974, 0.090310362417128785, -0.072931820982933585, -0.21213479841761175, -0.063160809715479437, 0.063160809715479437, 1.6201774043133018, 2.6080393955210424, {1.0355607461569955, 0.0, 0.0, -0.23300116788532395}, {0.0, -0.51778037307849784, 0.85551357981898311, 0.0}},
    {0.60000000000000000, 1.5000000000000000, 0.80000000000000000, 0.45000000000000001, 0.40000000000000002, 2.0000000000000000, 0.38100080443022007, -0.60452186419707384, 1.9987665045577874, 0.35277796504170718, -0.29914287090862477, 0.0, -0.050807518438533340, -0.33380856032602653, -0.077674853123045183, -1.8970722403863694, -0.0034413031891249028, -0.022609576269639752, -0.14854632416815605, 0.0019357330438827578, 0.047276889169412348, 1.1546552127113830, -0.15857365893059333, -0.32323787358410909, -0.033521933833176504, 0.033521933833176504, 4.0119343110767814, 5.2460952347512945, {1.0284674363954276, 0.0, -4.9920104158517156e-33, -0.042110181870343307}, {0.0, -0.94728123926597153, 0.14418147031183256, 0.0}},
}};

}  // namespace polar::fixtures
