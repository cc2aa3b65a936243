class DiffractionModel {
public:
    int simulate(int beam) {
        int out = beam;
        return out;
    }
};
