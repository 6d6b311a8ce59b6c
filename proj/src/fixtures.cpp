#include "eqaoa/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace eqaoa {

namespace {

std::vector<ReferenceFixture> build_fixtures() {
    return {
        {"gamma1", MixerKind::ClassicalB,
         {
          0.7197265625, 0.47265625, 0.7060546875, 0.951171875, 0.76171875, 0.693359375,
          0.3583984375, 1.111328125, 1.162109375, 0.4345703125, 1.103515625, 0.8515625,
          0.7138671875, 1.068359375, 0.6728515625, 0.673828125, 1.1064453125, 0.921875,
          0.8251953125, 0.5615234375, 0.60546875, 0.744140625, 0.400390625, 0.4580078125,
          0.8466796875, 0.4697265625, 0.802734375, 0.5439453125, 0.451171875, 0.5068359375,
          1.0009765625, 0.6708984375, 0.474609375, 0.734375, 0.58203125, 1.1025390625, 0.97265625,
          0.4443359375, 0.970703125, 0.4609375, 0.9208984375, 0.4873046875, 1.0146484375,
          0.8544921875, 0.705078125, 0.5205078125, 0.6640625, 1.0341796875, 0.521484375,
          0.462890625,
         }},
        {"gamma1", MixerKind::EquivariantM,
         {
          0.4296875, 0.337890625, 0.453125, 0.4287109375, 0.587890625, 0.7451171875, 1.05078125,
          0.4287109375, 0.2177734375, 0.1923828125, 0.94921875, 0.5126953125, 0.423828125,
          0.3095703125, 0.6376953125, 0.47265625, 0.34375, 0.86328125, 0.5947265625, 0.5712890625,
          0.458984375, 0.5810546875, 0.6552734375, 0.49609375, 0.6533203125, 0.6552734375,
          0.4306640625, 0.439453125, 2.6904296875, 0.306640625, 0.4619140625, 0.3212890625,
          0.71484375, 0.33984375, 0.564453125, 0.5341796875, 1.271484375, 0.890625, 0.4296875,
          0.421875, 0.3603515625, 0.4365234375, 0.587890625, 0.53125, 0.5517578125, 0.3251953125,
          0.5400390625, 0.4541015625, 0.4560546875, 0.34765625,
         }},
        {"gamma1", MixerKind::EquivariantChi,
         {
          0.7509765625, 0.466796875, 0.6162109375, 0.4423828125, 0.9833984375, 0.66015625,
          0.45703125, 2.23046875, 0.4990234375, 0.162109375, 0.6943359375, 0.44921875, 0.3828125,
          0.5478515625, 0.509765625, 0.572265625, 1.1337890625, 0.6220703125, 0.568359375,
          0.3388671875, 0.4521484375, 0.572265625, 0.482421875, 0.7216796875, 0.4609375,
          0.9482421875, 0.53125, 0.64453125, 0.419921875, 0.5185546875, 0.3173828125, 0.5400390625,
          0.5546875, 0.603515625, 0.552734375, 0.4140625, 0.396484375, 0.333984375, 0.56640625,
          0.451171875, 0.6630859375, 0.3564453125, 0.259765625, 1.30078125, 0.318359375,
          0.2587890625, 0.427734375, 0.357421875, 0.4814453125, 0.634765625,
         }},
        {"gamma2", MixerKind::ClassicalB,
         {
          0.8935546875, 0.7373046875, 1.03125, 0.9853515625, 0.59375, 0.8427734375, 1.3671875,
          1.0283203125, 0.7568359375, 1.2744140625, 0.8642578125, 1.0576171875, 1.3232421875,
          0.9296875, 1.1103515625, 1.345703125, 0.98046875, 0.9306640625, 0.7158203125,
          1.3310546875, 1.228515625, 1.099609375, 0.6767578125, 0.8671875, 1.3671875, 0.7724609375,
          0.5341796875, 0.7314453125, 0.931640625, 1.3564453125, 1.2001953125, 1.203125,
          1.1240234375, 1.0009765625, 1.2568359375, 1.296875, 0.91015625, 0.798828125,
          1.2861328125, 0.9072265625, 0.73828125, 0.7431640625, 0.943359375, 0.953125, 0.6953125,
          0.931640625, 0.7392578125, 0.4814453125, 0.6435546875, 0.8115234375, 0.865234375,
          0.7880859375, 1.1826171875, 0.5283203125, 1.25390625, 1.349609375,
         }},
        {"gamma2", MixerKind::EquivariantM,
         {
          1.056640625, 0.947265625, 0.724609375, 0.69140625, 0.7978515625, 0.8427734375,
          0.728515625, 1.103515625, 0.8837890625, 0.56640625, 0.76171875, 0.8798828125,
          0.7705078125, 0.85546875, 1.0478515625, 0.6630859375, 0.419921875, 0.5029296875,
          0.96484375, 0.6982421875, 0.666015625, 0.9130859375, 0.4892578125, 0.4345703125,
          0.634765625, 0.5908203125, 0.6484375, 0.548828125, 0.85546875, 0.845703125, 0.8125,
          0.896484375, 1.0224609375, 0.8525390625, 0.5224609375, 0.810546875, 0.6953125,
          0.9267578125, 0.50390625, 0.443359375, 0.873046875, 0.76953125, 0.646484375,
          0.6591796875, 0.4189453125, 0.728515625, 0.94921875, 0.67578125, 1.140625, 0.74609375,
          0.888671875, 0.369140625, 0.8662109375, 0.5361328125, 0.625, 0.7314453125,
         }},
        {"gamma2", MixerKind::EquivariantChi,
         {
          0.57421875, 1.359375, 0.9267578125, 0.5166015625, 2.634765625, 1.21484375, 0.5166015625,
          0.705078125, 0.7509765625, 0.8310546875, 0.5078125, 0.396484375, 0.720703125,
          0.681640625, 0.80859375, 0.947265625, 0.541015625, 0.630859375, 3.3291015625,
          0.998046875, 0.6767578125, 0.939453125, 0.708984375, 0.498046875, 0.8095703125,
          0.66015625, 0.6796875, 0.546875, 1.3115234375, 0.720703125, 0.5595703125, 0.7919921875,
          0.86328125, 3.357421875, 0.705078125, 0.7841796875, 0.69140625, 1.080078125,
          0.7685546875, 0.908203125, 0.4140625, 0.794921875, 0.6171875, 0.73828125, 0.5966796875,
          0.9150390625, 0.5263671875, 0.603515625, 0.6123046875, 0.5517578125, 0.580078125,
          1.0693359375, 0.75390625, 0.4228515625, 1.1865234375, 0.6171875,
         }},
        {"gamma3", MixerKind::ClassicalB,
         {
          0.7587890625, 1.55078125, 1.1533203125, 1.376953125, 1.3876953125, 0.6533203125,
          1.0986328125, 0.8359375, 1.302734375, 1.9658203125, 1.2373046875, 1.2978515625,
          1.6015625, 1.24609375, 1.1748046875, 1.859375, 1.287109375, 1.2158203125, 1.4091796875,
          1.583984375, 1.2568359375, 1.0625, 1.1533203125, 1.2177734375, 1.2255859375, 0.8515625,
          0.9443359375, 0.8984375, 2.0322265625, 1.107421875, 1.2724609375, 1.0517578125,
          1.2353515625, 1.3232421875, 0.7734375, 2.04296875, 0.7099609375, 1.4326171875,
          1.2724609375, 1.1435546875, 1.220703125, 0.673828125, 1.0654296875, 0.9013671875,
          1.517578125, 1.00390625, 0.77734375, 1.5888671875, 1.376953125, 1.0849609375,
          1.4072265625, 1.4404296875, 1.48828125, 1.58984375, 1.359375, 1.4697265625,
         }},
        {"gamma3", MixerKind::EquivariantM,
         {
          0.99609375, 1.8056640625, 1.8330078125, 1.83984375, 0.6435546875, 1.412109375,
          0.908203125, 1.021484375, 1.857421875, 1.0087890625, 1.0, 0.73828125, 0.4228515625,
          0.49609375, 0.7626953125, 1.2744140625, 0.626953125, 1.0380859375, 0.732421875,
          0.6943359375, 0.8876953125, 1.0048828125, 0.8916015625, 0.84375, 1.080078125, 1.1171875,
          0.783203125, 0.75, 1.119140625, 0.984375, 1.0966796875, 1.0576171875, 0.96484375,
          1.501953125, 0.474609375, 0.83203125, 0.9482421875, 0.841796875, 1.1787109375,
          1.0810546875, 0.8466796875, 0.6689453125, 1.12109375, 0.767578125, 0.625, 0.880859375,
          0.8837890625, 0.5546875, 1.01171875, 0.794921875, 0.5693359375, 0.8076171875,
          0.369140625, 0.7451171875, 0.5517578125, 0.576171875,
         }},
        {"gamma3", MixerKind::EquivariantChi,
         {
          1.560546875, 0.9970703125, 0.8369140625, 0.6494140625, 0.7734375, 1.125, 0.5458984375,
          0.5458984375, 0.6767578125, 0.36328125, 0.6123046875, 0.626953125, 0.8505859375,
          0.9521484375, 0.8095703125, 0.5498046875, 0.701171875, 0.62109375, 0.3193359375,
          0.6328125, 0.869140625, 0.6708984375, 0.48046875, 0.8056640625, 0.8564453125,
          0.9853515625, 0.52734375, 0.5791015625, 1.544921875, 0.5908203125, 0.685546875,
          0.5751953125, 0.5126953125, 1.0576171875, 1.541015625, 0.9013671875, 0.73828125,
          0.75390625, 0.8974609375, 0.958984375, 0.513671875, 0.4990234375, 0.5185546875,
          0.85546875, 0.552734375, 0.5048828125, 0.931640625, 0.4443359375, 0.259765625, 0.5,
          1.0419921875, 0.5078125, 0.4580078125, 0.7392578125, 0.67578125, 0.783203125,
         }},
        {"gamma4", MixerKind::ClassicalB,
         {
          1.9794921875, 1.76171875, 1.90234375, 2.0283203125, 1.8857421875, 1.61328125,
          1.4912109375, 1.8388671875, 1.67578125, 1.6982421875, 1.2509765625, 1.087890625,
          1.53515625, 0.9619140625, 1.6357421875, 0.9931640625, 1.2158203125, 1.318359375,
          1.4931640625, 1.01171875, 1.4384765625, 1.6015625, 1.1884765625, 0.73828125,
          1.9501953125, 1.3408203125, 0.9677734375, 1.86328125, 1.93359375, 1.52734375, 2.2734375,
          1.4296875, 1.052734375, 1.82421875, 1.5869140625, 1.576171875, 1.5947265625,
          0.9580078125, 2.140625, 1.41015625, 0.9755859375, 1.423828125, 1.53515625, 1.427734375,
          1.6650390625, 1.1162109375, 1.30078125, 1.7001953125, 1.05078125, 1.2109375, 1.07421875,
          1.591796875, 1.0, 2.087890625, 1.6591796875, 1.60546875,
         }},
        {"gamma4", MixerKind::EquivariantM,
         {
          1.337890625, 4.0205078125, 1.150390625, 1.103515625, 1.1376953125, 1.3916015625, 0.78125,
          1.111328125, 1.150390625, 1.1142578125, 1.1484375, 0.8193359375, 1.2724609375,
          0.720703125, 1.2490234375, 1.2998046875, 0.72265625, 0.8916015625, 1.3759765625,
          1.763671875, 0.7705078125, 1.509765625, 0.697265625, 0.771484375, 1.623046875,
          1.0498046875, 0.7705078125, 1.03515625, 1.5703125, 0.8212890625, 0.7666015625, 1.5078125,
          1.5185546875, 0.7626953125, 1.1513671875, 1.0986328125, 1.06640625, 0.5556640625,
          0.9345703125, 1.330078125, 1.3232421875, 4.037109375, 1.4052734375, 1.0908203125,
          1.3017578125, 1.5078125, 1.091796875, 1.5419921875, 0.8427734375, 0.51171875,
          0.7998046875, 1.43359375, 0.775390625, 0.755859375, 0.73828125, 0.939453125,
         }},
        {"gamma4", MixerKind::EquivariantChi,
         {
          0.5810546875, 1.6318359375, 1.1279296875, 1.3994140625, 1.15234375, 0.984375,
          1.587890625, 0.5703125, 1.2109375, 1.6142578125, 1.646484375, 0.7333984375, 0.8291015625,
          0.8759765625, 1.892578125, 1.4560546875, 0.95703125, 1.1044921875, 1.314453125,
          1.44140625, 0.8701171875, 0.9189453125, 2.033203125, 0.7548828125, 0.73828125,
          0.8232421875, 0.7509765625, 1.126953125, 1.04296875, 1.16796875, 0.478515625,
          1.5283203125, 1.3818359375, 1.44921875, 0.6689453125, 0.458984375, 1.1455078125,
          4.06640625, 1.361328125, 0.8427734375, 1.205078125, 0.5595703125, 1.33984375, 1.12109375,
          1.4677734375, 4.0927734375, 1.125, 1.2421875, 1.1181640625, 0.439453125, 1.2666015625,
          1.5205078125, 1.4794921875, 1.6552734375, 1.26953125, 0.9033203125,
         }},
        {"gamma5", MixerKind::ClassicalB,
         {
          0.8876953125, 1.2763671875, 1.3173828125, 0.8857421875, 0.67578125, 1.2724609375,
          1.3515625, 1.04296875, 1.8623046875, 2.021484375, 1.744140625, 2.0673828125,
          1.5673828125, 1.3984375, 1.216796875, 1.748046875, 0.90625, 1.361328125, 1.177734375,
          1.7314453125, 1.146484375, 0.9697265625, 1.4765625, 0.875, 1.423828125, 1.251953125,
          0.6162109375, 3.7978515625, 0.90234375, 1.173828125, 0.7646484375, 0.787109375,
          2.12109375, 1.5830078125, 1.3203125, 0.8544921875, 0.8984375, 1.5478515625, 0.771484375,
          1.2041015625, 1.7158203125, 1.455078125, 1.5888671875, 1.1015625, 1.6943359375,
          1.44140625, 1.2958984375, 0.9619140625, 1.3642578125, 1.7265625,
         }},
        {"gamma5", MixerKind::EquivariantM,
         {
          0.5556640625, 1.0712890625, 0.814453125, 0.9384765625, 0.5458984375, 1.19921875,
          0.697265625, 1.0419921875, 1.1787109375, 1.076171875, 0.7392578125, 0.96484375,
          0.8251953125, 0.9091796875, 0.3515625, 1.1796875, 1.2470703125, 1.1689453125,
          1.0224609375, 0.5908203125, 0.962890625, 0.98828125, 0.5693359375, 0.88671875,
          1.0869140625, 0.5478515625, 1.2666015625, 0.755859375, 0.7587890625, 0.87109375,
          1.005859375, 0.7548828125, 0.7685546875, 1.0107421875, 1.0537109375, 1.90625,
          0.7744140625, 1.0517578125, 0.73828125, 0.8505859375, 0.9853515625, 0.6572265625,
          0.7197265625, 1.0859375, 1.1904296875, 0.451171875, 1.01171875, 1.232421875,
          0.9833984375, 0.6982421875,
         }},
        {"gamma5", MixerKind::EquivariantChi,
         {
          0.7705078125, 1.015625, 0.6357421875, 1.1220703125, 1.1748046875, 1.021484375,
          0.7626953125, 0.84375, 1.0478515625, 0.7451171875, 0.2939453125, 0.7197265625,
          3.564453125, 0.6787109375, 0.943359375, 1.03125, 1.0517578125, 1.2998046875,
          0.5810546875, 0.419921875, 1.072265625, 0.98828125, 1.052734375, 1.1630859375,
          0.775390625, 1.158203125, 1.0888671875, 0.92578125, 1.00390625, 0.7197265625,
          1.2841796875, 1.115234375, 1.0029296875, 0.4296875, 0.9267578125, 1.1337890625,
          1.0966796875, 1.263671875, 0.7626953125, 1.0029296875, 0.6748046875, 0.8154296875,
          1.0615234375, 0.7060546875, 0.4638671875, 0.857421875, 0.46484375, 0.6328125,
          0.931640625, 0.7626953125,
         }},
        {"gamma6", MixerKind::ClassicalB,
         {
          1.2734375, 0.8828125, 0.9345703125, 0.7607421875, 0.8056640625, 0.8671875, 1.029296875,
          0.9658203125, 0.9189453125, 0.677734375, 0.923828125, 1.4697265625, 0.943359375,
          0.50390625, 0.7412109375, 0.80078125, 1.2392578125, 0.619140625, 0.8486328125,
          0.865234375, 0.5771484375, 0.908203125, 0.7236328125, 0.818359375, 1.2490234375,
          0.8076171875, 0.7763671875, 0.501953125,
         }},
        {"gamma6", MixerKind::EquivariantM,
         {
          0.740234375, 0.5732421875, 0.4287109375, 0.8701171875, 0.484375, 0.8056640625,
          0.4775390625, 0.5478515625, 0.548828125, 0.431640625, 0.62109375, 0.5361328125, 0.359375,
          0.3427734375, 0.634765625, 0.361328125, 0.5654296875, 0.4560546875, 0.509765625,
          0.771484375, 0.71484375, 0.4404296875, 0.4228515625, 0.5048828125, 0.556640625,
          0.3310546875, 0.169921875, 0.4287109375,
         }},
        {"frakG", MixerKind::ClassicalB,
         {
          6.244140625, 11.4814453125, 7.03125, 13.751953125, 10.3359375, 11.341796875, 8.283203125,
          10.568359375, 8.0009765625, 8.5439453125, 9.2236328125, 11.728515625, 9.7509765625,
          8.8525390625, 6.7548828125, 11.6884765625, 10.36328125, 8.052734375, 7.7373046875,
          9.3095703125, 11.6220703125, 11.138671875, 9.30078125, 9.0810546875, 8.375, 9.818359375,
          10.845703125, 10.0556640625, 11.369140625, 12.1640625, 11.9833984375, 11.3623046875,
          10.6640625, 10.3486328125, 9.7333984375, 9.09765625, 9.6328125, 11.68359375,
          10.5478515625, 8.7705078125, 10.8388671875, 8.5537109375, 10.9375, 10.8603515625,
          9.2939453125, 13.6357421875, 10.5087890625, 11.9189453125, 10.1201171875, 10.759765625,
         }},
        {"frakG", MixerKind::EquivariantM,
         {
          11.1982421875, 10.380859375, 10.140625, 8.1171875, 6.310546875, 9.2841796875,
          11.1376953125, 5.552734375, 8.103515625, 10.216796875, 6.7373046875, 5.8720703125,
          7.8486328125, 7.1875, 9.87109375, 4.4765625, 9.70703125, 5.384765625, 4.5400390625,
          6.044921875, 9.1015625, 6.666015625, 9.892578125, 10.5, 7.5126953125, 5.4208984375,
          9.3388671875, 5.251953125, 4.9921875, 4.9287109375, 5.7861328125, 5.6337890625,
          9.662109375, 7.44140625, 7.94140625, 5.05859375, 9.96484375, 8.8173828125, 9.5810546875,
          9.0849609375, 11.908203125, 12.74609375, 8.8642578125, 9.662109375, 6.443359375,
          10.765625, 5.896484375, 6.01953125, 10.4931640625, 9.1298828125,
         }},
        {"frakG", MixerKind::EquivariantChi,
         {
          9.732421875, 7.076171875, 6.4013671875, 5.33984375, 10.7353515625, 8.7021484375,
          8.9619140625, 13.6474609375, 6.12109375, 8.5380859375, 7.9765625, 7.875, 13.1259765625,
          5.63671875, 11.36328125, 7.5361328125, 8.2001953125, 9.3388671875, 9.4052734375,
          6.982421875, 10.7568359375, 8.822265625, 5.630859375, 7.5478515625, 8.0595703125,
          6.431640625, 10.6962890625, 9.6943359375, 8.9541015625, 10.05078125, 8.5751953125,
          12.6513671875, 13.6552734375, 9.2294921875, 9.228515625, 4.9443359375, 7.71484375,
          7.28125, 5.3447265625, 5.65234375, 13.5234375, 13.6474609375, 12.0439453125,
          7.6533203125, 10.59765625, 9.6298828125, 9.1064453125, 12.6533203125, 12.947265625,
          6.5439453125,
         }},
    };
}

}  // namespace

const std::vector<ReferenceFixture>& reference_fixtures() {
    static const std::vector<ReferenceFixture> fixtures = build_fixtures();
    return fixtures;
}

const ReferenceFixture* find_fixture(std::string_view graph, MixerKind mixer) {
    for (const ReferenceFixture& f : reference_fixtures()) {
        if (f.graph == graph && f.mixer == mixer) return &f;
    }
    return nullptr;
}

SampleSet fixture_samples(std::string_view graph, MixerKind mixer) {
    const ReferenceFixture* f = find_fixture(graph, mixer);
    if (f == nullptr) {
        throw std::invalid_argument("no fixture for " + std::string(graph) + "/" +
                                    std::string(mixer_name(mixer)));
    }
    return SampleSet{std::string(graph) + "/" + std::string(mixer_name(mixer)), f->values};
}

}  // namespace eqaoa
